// Debounced, single-in-flight request gate.
//
// Contract: rapid schedule() calls collapse to the newest task; at most
// one task runs at a time; a task arriving while one is in flight is
// parked (replacing any previously parked task) and launched when the
// running one settles. The final UI state therefore always reflects the
// final input, and the server never sees overlapping requests.

export type Task = () => Promise<void>;

export class RequestGate {
  private timer: ReturnType<typeof setTimeout> | null = null;
  private inFlight = false;
  private parked: Task | null = null;

  constructor(private readonly delayMs: number) {}

  /** Debounce `task`; earlier pending tasks are discarded. */
  schedule(task: Task): void {
    if (this.timer !== null) {
      clearTimeout(this.timer);
    }
    this.timer = setTimeout(() => {
      this.timer = null;
      this.launch(task);
    }, this.delayMs);
  }

  /** Run `task` as soon as the gate allows, skipping the debounce delay. */
  immediate(task: Task): void {
    if (this.timer !== null) {
      clearTimeout(this.timer);
      this.timer = null;
    }
    this.launch(task);
  }

  get busy(): boolean {
    return this.inFlight;
  }

  private launch(task: Task): void {
    if (this.inFlight) {
      this.parked = task;
      return;
    }
    this.inFlight = true;
    const settle = () => {
      this.inFlight = false;
      const next = this.parked;
      this.parked = null;
      if (next) {
        this.launch(next);
      }
    };
    // tasks own their error handling; the gate only sequences them
    task().then(settle, settle);
  }
}
