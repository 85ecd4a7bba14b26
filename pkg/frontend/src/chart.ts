// Geometry for the 36-point reflectance chart. The y-axis is fixed to
// [0, 1.05] so curves that overshoot 1 (the log-domain solver on bright
// saturated inputs) visibly hug the top edge instead of rescaling the
// plot; a guide line marks reflectance 1.

export const SAMPLE_COUNT = 36;
export const WAVELENGTH_START = 380;
export const WAVELENGTH_STEP = 10;
export const Y_MAX = 1.05;

export function wavelengthAt(index: number): number {
  return WAVELENGTH_START + WAVELENGTH_STEP * index;
}

export function chartX(index: number, width: number): number {
  return (index / (SAMPLE_COUNT - 1)) * width;
}

/** Value -> pixel y, clamped into the fixed [0, Y_MAX] window. */
export function chartY(value: number, height: number): number {
  const clamped = Math.min(Math.max(value, 0), Y_MAX);
  return height - (clamped / Y_MAX) * height;
}

export function unityLineY(height: number): number {
  return chartY(1.0, height);
}

/** SVG polyline `points` attribute for one reflectance curve. */
export function polylinePoints(
  values: readonly number[],
  width: number,
  height: number,
): string {
  if (values.length !== SAMPLE_COUNT) {
    throw new Error(`expected ${SAMPLE_COUNT} samples, got ${values.length}`);
  }
  return values
    .map((v, k) => `${chartX(k, width).toFixed(2)},${chartY(v, height).toFixed(2)}`)
    .join(" ");
}
