// Session state and the pure transforms the DOM layer calls into.
// Everything here is synchronous and side-effect free so it can be
// tested without a browser.

import type { ColorPart, MixRequestBody, MixResponse } from "./api.js";

export const ALGORITHMS = ["ilss", "llss", "illss", "catalog"] as const;
export type Algorithm = (typeof ALGORITHMS)[number];

export const METRICS = ["lab", "srgb"] as const;
export type Metric = (typeof METRICS)[number];

export interface PaletteSlot {
  hex: string;
  parts: number;
  enabled: boolean;
}

export interface SessionState {
  slots: PaletteSlot[];
  algorithm: Algorithm;
  steps: number;
  metric: Metric;
  lastResponse: MixResponse | null;
  pending: boolean;
  error: string | null;
}

const HEX_FORM = /^#?[0-9a-fA-F]{6}$/;

export function isValidHex(text: string): boolean {
  return HEX_FORM.test(text);
}

/** Canonical form: six uppercase digits, no leading '#'. */
export function normalizeHex(text: string): string {
  return text.replace(/^#/, "").toUpperCase();
}

export function initialState(): SessionState {
  return {
    slots: [
      { hex: "FFFF00", parts: 1, enabled: true },
      { hex: "0000FF", parts: 1, enabled: true },
    ],
    algorithm: "illss",
    steps: 9,
    metric: "lab",
    lastResponse: null,
    pending: false,
    error: null,
  };
}

export function addSlot(state: SessionState, hex = "FFFFFF"): SessionState {
  return {
    ...state,
    slots: [...state.slots, { hex: normalizeHex(hex), parts: 1, enabled: true }],
  };
}

export function removeSlot(state: SessionState, index: number): SessionState {
  return { ...state, slots: state.slots.filter((_, k) => k !== index) };
}

export function updateSlot(
  state: SessionState,
  index: number,
  patch: Partial<PaletteSlot>,
): SessionState {
  return {
    ...state,
    slots: state.slots.map((slot, k) => (k === index ? { ...slot, ...patch } : slot)),
  };
}

/** Slots that actually take part in the mix: enabled, parts > 0. */
export function activeColors(state: SessionState): ColorPart[] {
  return state.slots
    .filter((slot) => slot.enabled && slot.parts > 0)
    .map((slot) => ({ hex: normalizeHex(slot.hex), parts: slot.parts }));
}

/** Submit gate: at least one active slot and no malformed hex among them. */
export function canSubmit(state: SessionState): boolean {
  const active = state.slots.filter((slot) => slot.enabled && slot.parts > 0);
  return active.length >= 1 && active.every((slot) => isValidHex(slot.hex));
}

/**
 * Request body for the current state. The path step count only applies
 * to two-color mixes (the server rejects it otherwise), so it is sent
 * exactly when two colors are active.
 */
export function buildMixBody(state: SessionState): MixRequestBody {
  const colors = activeColors(state);
  const body: MixRequestBody = { colors, algorithm: state.algorithm };
  if (colors.length === 2) {
    body.steps = state.steps;
  }
  if (state.algorithm === "catalog") {
    body.metric = state.metric;
  }
  return body;
}
