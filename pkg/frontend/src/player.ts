import { renderSlice } from "./render";
import { initialState, transport } from "./transport";
import type { AnimationDoc, PlayerState, Selection, TransportAction } from "./types";
import { parseDoc, SUPPORTED_VERSION } from "./types";

const STYLE = `
.cn-player { font-family: sans-serif; }
.cn-stage { width: 100%; max-width: 820px; border: 1px solid #ddd; background: #fff; display: block; }
.cn-controls { display: flex; gap: 8px; align-items: center; margin-top: 8px; }
.cn-controls button { padding: 2px 10px; }
.cn-seek { flex: 1; }
.cn-banner { padding: 10px; background: #fff3cd; border: 1px solid #e0c060; margin-bottom: 8px; }
.cn-banner.error { background: #f8d7da; border-color: #d08080; }
.cn-tooltip { position: absolute; max-width: 320px; background: #222; color: #fff;
  padding: 6px 8px; border-radius: 4px; font-size: 12px; pointer-events: none; }
.cn-player .selected { stroke: #000; stroke-width: 2; }
`;

export class Player {
  readonly doc: AnimationDoc;
  state: PlayerState;
  private root: HTMLElement;
  private svg!: SVGSVGElement;
  private label!: HTMLElement;
  private seek!: HTMLInputElement;
  private playButton!: HTMLButtonElement;
  private tooltip!: HTMLElement;
  private timer: ReturnType<typeof setInterval> | null = null;

  constructor(root: HTMLElement, doc: AnimationDoc, intervalMs = 1000) {
    this.root = root;
    this.doc = doc;
    this.state = initialState(intervalMs);
    this.mount();
    this.render();
  }

  static fromEmbeddedJson(root: HTMLElement, dataElementId = "animation-data"): Player | null {
    const holder = document.getElementById(dataElementId);
    const banner = (message: string) => {
      const div = document.createElement("div");
      div.className = "cn-banner error";
      div.textContent = message;
      root.appendChild(div);
    };
    if (!holder || !holder.textContent) {
      banner("no animation data found in this page");
      return null;
    }
    let doc: AnimationDoc;
    try {
      doc = parseDoc(JSON.parse(holder.textContent));
    } catch (err) {
      banner(`cannot load animation: ${err instanceof Error ? err.message : String(err)}`);
      return null;
    }
    return new Player(root, doc);
  }

  get sliceCount(): number {
    return this.doc.slices.length;
  }

  dispatch(action: TransportAction): void {
    const before = this.state;
    this.state = transport(before, action, this.sliceCount);
    if (this.state.playing && !this.timer) {
      this.timer = setInterval(() => this.dispatch({ type: "tick" }), this.state.intervalMs);
    }
    if (!this.state.playing && this.timer) {
      clearInterval(this.timer);
      this.timer = null;
    }
    this.render();
  }

  private mount(): void {
    const doc = this.root.ownerDocument;
    this.root.classList.add("cn-player");
    const style = doc.createElement("style");
    style.textContent = STYLE;
    this.root.appendChild(style);

    if (this.sliceCount === 0) {
      const banner = doc.createElement("div");
      banner.className = "cn-banner";
      banner.textContent = "no data: this animation document has zero slices";
      this.root.appendChild(banner);
      return;
    }

    this.svg = doc.createElementNS("http://www.w3.org/2000/svg", "svg") as SVGSVGElement;
    this.svg.setAttribute("class", "cn-stage");
    this.root.appendChild(this.svg);

    const controls = doc.createElement("div");
    controls.className = "cn-controls";
    this.playButton = doc.createElement("button");
    this.playButton.setAttribute("data-action", "play");
    this.playButton.textContent = "Play";
    const back = doc.createElement("button");
    back.setAttribute("data-action", "step_back");
    back.textContent = "<";
    const fwd = doc.createElement("button");
    fwd.setAttribute("data-action", "step_fwd");
    fwd.textContent = ">";
    this.seek = doc.createElement("input");
    this.seek.type = "range";
    this.seek.className = "cn-seek";
    this.seek.min = "0";
    this.seek.max = String(this.sliceCount - 1);
    this.label = doc.createElement("span");
    this.label.className = "cn-label";
    controls.append(this.playButton, back, fwd, this.seek, this.label);
    this.root.appendChild(controls);

    this.tooltip = doc.createElement("div");
    this.tooltip.className = "cn-tooltip";
    this.tooltip.hidden = true;
    this.root.appendChild(this.tooltip);

    this.playButton.addEventListener("click", () =>
      this.dispatch({ type: this.state.playing ? "pause" : "play" }),
    );
    back.addEventListener("click", () => this.dispatch({ type: "step_back" }));
    fwd.addEventListener("click", () => this.dispatch({ type: "step_fwd" }));
    this.seek.addEventListener("input", () =>
      this.dispatch({ type: "seek", index: Number(this.seek.value) }),
    );
  }

  private showTooltip(selection: Selection, text: string, event: MouseEvent): void {
    this.dispatch({ type: "select", selection });
    this.tooltip.textContent = text;
    this.tooltip.hidden = false;
    this.tooltip.style.left = `${event.pageX + 10}px`;
    this.tooltip.style.top = `${event.pageY + 10}px`;
  }

  private render(): void {
    if (this.sliceCount === 0) return;
    const index = this.state.sliceIndex;
    const slice = this.doc.slices[index];
    renderSlice(this.svg, this.doc, index, this.state.selection, {
      onSelect: (selection, text, event) => this.showTooltip(selection, text, event),
    });
    if (this.state.selection === null) {
      this.tooltip.hidden = true;
    }
    this.label.textContent = `day ${slice.day} · slice ${index + 1}/${this.sliceCount}`;
    this.seek.value = String(index);
    this.playButton.textContent = this.state.playing ? "Pause" : "Play";
  }
}

export { SUPPORTED_VERSION };
