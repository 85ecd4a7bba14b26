// DOM wiring. All color math lives on the server: this file only moves
// state into requests and responses onto the screen. Hexes are shown
// verbatim as the server returned them.

import { ApiError, postMix } from "./api.js";
import type { InputReport, MixResponse, PathSwatch } from "./api.js";
import { polylinePoints, unityLineY, wavelengthAt } from "./chart.js";
import { RequestGate } from "./scheduler.js";
import {
  ALGORITHMS,
  METRICS,
  SessionState,
  addSlot,
  buildMixBody,
  canSubmit,
  initialState,
  normalizeHex,
  removeSlot,
  updateSlot,
} from "./state.js";
import type { Algorithm, Metric } from "./state.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const DEBOUNCE_MS = 250;

let state: SessionState = initialState();
const gate = new RequestGate(DEBOUNCE_MS);

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function setState(patch: Partial<SessionState>): void {
  state = { ...state, ...patch };
}

// ---- submission -----------------------------------------------------------

function submit(immediately = false): void {
  if (!canSubmit(state)) {
    setState({ error: "enable at least one color with parts > 0", pending: false });
    renderStatus();
    renderOutput();
    return;
  }
  const body = buildMixBody(state);
  setState({ pending: true });
  renderStatus();
  const task = async () => {
    try {
      const response = await postMix(body);
      setState({ lastResponse: response, error: null });
    } catch (err) {
      // previous result stays on screen; only the banner changes
      if (err instanceof ApiError) {
        setState({ error: err.message });
      } else {
        setState({ error: "network failure: the service did not answer" });
      }
    }
    setState({ pending: false });
    renderStatus();
    renderOutput();
  };
  if (immediately) {
    gate.immediate(task);
  } else {
    gate.schedule(task);
  }
}

// ---- palette --------------------------------------------------------------

function renderSlots(): void {
  const host = document.getElementById("slots")!;
  host.replaceChildren();
  state.slots.forEach((slot, index) => {
    const row = el("div", "slot");

    const enabled = el("input") as HTMLInputElement;
    enabled.type = "checkbox";
    enabled.checked = slot.enabled;
    enabled.title = "include in the mix";
    enabled.addEventListener("change", () => {
      state = updateSlot(state, index, { enabled: enabled.checked });
      submit();
    });

    const picker = el("input") as HTMLInputElement;
    picker.type = "color";
    picker.value = `#${slot.hex.toLowerCase()}`;
    picker.addEventListener("input", () => {
      state = updateSlot(state, index, { hex: normalizeHex(picker.value) });
      hexLabel.textContent = normalizeHex(picker.value);
      submit();
    });

    const hexLabel = el("span", "hex-label", slot.hex);

    const slider = el("input") as HTMLInputElement;
    slider.type = "range";
    slider.min = "0";
    slider.max = "10";
    slider.step = "0.1";
    slider.value = String(slot.parts);
    slider.addEventListener("input", () => {
      const parts = Number(slider.value);
      state = updateSlot(state, index, { parts });
      partsLabel.textContent = partsText(parts);
      submit();
    });

    const partsLabel = el("span", "parts-label", partsText(slot.parts));

    const remove = el("button", "remove", "×");
    remove.title = "remove this color";
    remove.addEventListener("click", () => {
      state = removeSlot(state, index);
      renderSlots();
      submit();
    });

    row.append(enabled, picker, hexLabel, slider, partsLabel, remove);
    host.append(row);
  });
}

function partsText(parts: number): string {
  return `parts ${parts.toFixed(1)}`;
}

// ---- controls -------------------------------------------------------------

function renderControls(): void {
  const algorithm = document.getElementById("algorithm") as HTMLSelectElement;
  algorithm.replaceChildren(
    ...ALGORITHMS.map((name) => {
      const option = el("option", undefined, name);
      option.value = name;
      return option;
    }),
  );
  algorithm.value = state.algorithm;
  algorithm.addEventListener("change", () => {
    setState({ algorithm: algorithm.value as Algorithm });
    syncMetricVisibility();
    submit();
  });

  const steps = document.getElementById("steps") as HTMLInputElement;
  steps.value = String(state.steps);
  steps.addEventListener("change", () => {
    const parsed = Math.max(1, Math.min(30, Math.round(Number(steps.value) || 9)));
    steps.value = String(parsed);
    setState({ steps: parsed });
    submit();
  });

  const metric = document.getElementById("metric") as HTMLSelectElement;
  metric.replaceChildren(
    ...METRICS.map((name) => {
      const option = el("option", undefined, name);
      option.value = name;
      return option;
    }),
  );
  metric.value = state.metric;
  metric.addEventListener("change", () => {
    setState({ metric: metric.value as Metric });
    submit();
  });

  document.getElementById("add-slot")!.addEventListener("click", () => {
    state = addSlot(state);
    renderSlots();
    submit();
  });

  syncMetricVisibility();
}

function syncMetricVisibility(): void {
  const wrap = document.getElementById("metric-wrap")!;
  wrap.classList.toggle("hidden", state.algorithm !== "catalog");
}

// ---- output ---------------------------------------------------------------

function renderStatus(): void {
  const status = document.getElementById("status")!;
  status.textContent = state.pending ? "mixing…" : "";
}

function renderOutput(): void {
  renderError();
  const response = state.lastResponse;
  renderResult(response);
  renderPath(response?.path ?? null);
  renderInputs(response?.inputs ?? []);
  renderChart(response);
}

function renderError(): void {
  const banner = document.getElementById("error")!;
  banner.replaceChildren();
  banner.classList.toggle("hidden", state.error === null);
  if (state.error === null) return;
  banner.append(el("span", undefined, state.error));
  const retry = el("button", undefined, "retry");
  retry.addEventListener("click", () => submit(true));
  banner.append(retry);
}

function renderResult(response: MixResponse | null): void {
  const swatch = document.getElementById("result-swatch")!;
  const label = document.getElementById("result-label")!;
  if (response === null) {
    swatch.style.background = "transparent";
    label.textContent = "no result yet";
    return;
  }
  swatch.style.background = `#${response.result_hex}`;
  const clipped = response.clipped ? " (gamut clipped)" : "";
  label.textContent = `${response.result_hex} · ${response.algorithm}${clipped}`;
}

function renderPath(path: PathSwatch[] | null): void {
  const strip = document.getElementById("path")!;
  strip.replaceChildren();
  strip.classList.toggle("hidden", path === null);
  if (path === null) return;
  for (const stop of path) {
    const cell = el("div", "path-stop");
    cell.style.background = `#${stop.hex}`;
    cell.title = `${stop.parts[0]}:${stop.parts[1]} ${stop.hex}`;
    strip.append(cell);
  }
}

function renderInputs(inputs: InputReport[]): void {
  const list = document.getElementById("inputs")!;
  list.replaceChildren();
  for (const input of inputs) {
    const row = el("div", "input-row");
    const chip = el("span", "chip");
    chip.style.background = `#${input.hex}`;
    const name = input.matched_name !== null ? ` matched ${input.matched_name}` : "";
    const converged = input.converged ? "" : " (did not converge)";
    row.append(
      chip,
      el(
        "span",
        undefined,
        `${input.hex}${name} · ${input.inner_iterations} inner / ` +
          `${input.outer_iterations} outer${converged}`,
      ),
    );
    list.append(row);
  }
}

const CHART_W = 720;
const CHART_H = 220;

function renderChart(response: MixResponse | null): void {
  const host = document.getElementById("chart")!;
  host.replaceChildren();
  if (response === null) return;

  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", `0 0 ${CHART_W} ${CHART_H}`);
  svg.setAttribute("preserveAspectRatio", "none");

  const unity = document.createElementNS(SVG_NS, "line");
  const unityY = unityLineY(CHART_H).toFixed(2);
  unity.setAttribute("x1", "0");
  unity.setAttribute("x2", String(CHART_W));
  unity.setAttribute("y1", unityY);
  unity.setAttribute("y2", unityY);
  unity.setAttribute("class", "unity");
  svg.append(unity);

  for (const input of response.inputs) {
    svg.append(curve(input.reflectance, `#${input.hex}`, "input-curve"));
  }
  svg.append(curve(response.result_reflectance, `#${response.result_hex}`, "result-curve"));
  host.append(svg);

  const axis = el("div", "axis");
  for (const index of [0, 7, 14, 21, 28, 35]) {
    axis.append(el("span", undefined, `${wavelengthAt(index)}`));
  }
  host.append(axis);
}

function curve(values: number[], stroke: string, className: string): SVGPolylineElement {
  const line = document.createElementNS(SVG_NS, "polyline");
  line.setAttribute("points", polylinePoints(values, CHART_W, CHART_H));
  line.setAttribute("stroke", stroke);
  line.setAttribute("class", className);
  line.setAttribute("fill", "none");
  return line;
}

// ---- boot -----------------------------------------------------------------

renderSlots();
renderControls();
renderStatus();
renderOutput();
submit(true);
