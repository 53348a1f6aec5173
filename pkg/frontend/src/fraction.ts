// Exact rational values arrive from the API as numerator/denominator
// strings.  All comparisons happen on BigInt; the float field is only a
// display convenience and never decides anything.

export interface Frac {
  num: string;
  den: string;
  float?: number;
}

export function gtHalf(f: Frac): boolean {
  return 2n * BigInt(f.num) > BigInt(f.den);
}

export function fracText(f: Frac): string {
  return `${f.num}/${f.den}`;
}

export function percentText(f: Frac): string {
  // two-decimal percentage computed exactly, then formatted
  const scaled = (BigInt(f.num) * 10000n) / BigInt(f.den);
  const whole = scaled / 100n;
  const cents = (scaled % 100n).toString().padStart(2, "0");
  return `${whole}.${cents}%`;
}
