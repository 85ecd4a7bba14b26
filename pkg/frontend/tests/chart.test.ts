import { describe, expect, it } from "vitest";

import {
  SAMPLE_COUNT,
  Y_MAX,
  chartX,
  chartY,
  polylinePoints,
  unityLineY,
  wavelengthAt,
} from "../src/chart.js";

describe("wavelength grid", () => {
  it("spans 380 to 730 in 10 nm steps", () => {
    expect(wavelengthAt(0)).toBe(380);
    expect(wavelengthAt(1)).toBe(390);
    expect(wavelengthAt(SAMPLE_COUNT - 1)).toBe(730);
  });
});

describe("fixed y axis", () => {
  it("maps 0 to the bottom edge and the axis maximum to the top", () => {
    expect(chartY(0, 200)).toBe(200);
    expect(chartY(Y_MAX, 200)).toBe(0);
  });

  it("clamps overshoot to the top edge instead of rescaling", () => {
    expect(chartY(2.674, 200)).toBe(0); // log-domain red overshoot stays visible
    expect(chartY(1.05, 200)).toBe(0);
  });

  it("clamps negatives to the bottom edge", () => {
    expect(chartY(-0.2, 200)).toBe(200);
  });

  it("places the unity guide proportionally below the top", () => {
    expect(unityLineY(210)).toBeCloseTo(210 - 210 / 1.05, 10);
  });
});

describe("polyline geometry", () => {
  it("spaces 36 points evenly across the width", () => {
    expect(chartX(0, 700)).toBe(0);
    expect(chartX(SAMPLE_COUNT - 1, 700)).toBe(700);
    const gap = chartX(1, 700) - chartX(0, 700);
    expect(chartX(2, 700) - chartX(1, 700)).toBeCloseTo(gap, 10);
  });

  it("renders one coordinate pair per sample", () => {
    const flat = new Array(SAMPLE_COUNT).fill(0.5);
    const points = polylinePoints(flat, 720, 220);
    const pairs = points.split(" ");
    expect(pairs).toHaveLength(SAMPLE_COUNT);
    expect(pairs[0]).toBe(`0.00,${(220 - (0.5 / Y_MAX) * 220).toFixed(2)}`);
    expect(pairs[SAMPLE_COUNT - 1].startsWith("720.00,")).toBe(true);
  });

  it("rejects curves that are not 36 samples long", () => {
    expect(() => polylinePoints([0.5, 0.5], 720, 220)).toThrow(/36/);
  });
});
