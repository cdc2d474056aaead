import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";
import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";
import { Player } from "../src/player";
import { parseDoc } from "../src/types";
import type { AnimationDoc } from "../src/types";

const here = dirname(fileURLToPath(import.meta.url));
const fixtureDoc: AnimationDoc = parseDoc(
  JSON.parse(readFileSync(join(here, "fixtures", "animation.json"), "utf-8")),
);

function mount(doc: AnimationDoc): { root: HTMLElement; player: Player } {
  const root = document.createElement("div");
  document.body.appendChild(root);
  return { root, player: new Player(root, doc) };
}

afterEach(() => {
  document.body.innerHTML = "";
});

describe("player on the bundled fixture animation", () => {
  it("shows the 29-slice count", () => {
    const { root } = mount(fixtureDoc);
    expect(fixtureDoc.slices.length).toBe(29);
    const label = root.querySelector(".cn-label");
    expect(label?.textContent).toContain("slice 1/29");
    const seek = root.querySelector<HTMLInputElement>(".cn-seek");
    expect(seek?.max).toBe("28");
  });

  it("renders the first slice's node count", () => {
    const { root, player } = mount(fixtureDoc);
    const drawn = root.querySelectorAll("g.nodes > g").length;
    expect(drawn).toBe(fixtureDoc.slices[0].nodes.length);
    expect(player.sliceCount).toBe(29);
  });

  it("node click shows the tooltip text verbatim", () => {
    const { root } = mount(fixtureDoc);
    const first = fixtureDoc.slices[0].nodes[0];
    const el = root.querySelector(`g.nodes > g[data-key="${first.id}"]`) as SVGGElement;
    el.dispatchEvent(new MouseEvent("click"));
    const tooltip = root.querySelector<HTMLElement>(".cn-tooltip");
    expect(tooltip?.hidden).toBe(false);
    expect(tooltip?.textContent).toBe(first.tooltip);
  });

  it("seek clamps at both bounds", () => {
    const { player } = mount(fixtureDoc);
    player.dispatch({ type: "seek", index: -5 });
    expect(player.state.sliceIndex).toBe(0);
    player.dispatch({ type: "seek", index: 999 });
    expect(player.state.sliceIndex).toBe(28);
  });

  it("never mutates the loaded document", () => {
    const snapshot = JSON.stringify(fixtureDoc);
    const { player } = mount(fixtureDoc);
    player.dispatch({ type: "seek", index: 5 });
    player.dispatch({ type: "step_fwd" });
    expect(JSON.stringify(fixtureDoc)).toBe(snapshot);
  });
});

describe("playback", () => {
  beforeEach(() => {
    vi.useFakeTimers();
  });
  afterEach(() => {
    vi.useRealTimers();
  });

  it("play advances one slice per interval and pauses at the end", () => {
    const three: AnimationDoc = { ...fixtureDoc, slices: fixtureDoc.slices.slice(0, 3) };
    const { player } = mount(three);
    const visited: number[] = [player.state.sliceIndex];
    player.dispatch({ type: "play" });
    for (let i = 0; i < 5; i++) {
      vi.advanceTimersByTime(1000);
      visited.push(player.state.sliceIndex);
    }
    expect(visited.slice(0, 3)).toEqual([0, 1, 2]);
    expect(player.state.playing).toBe(false);
  });
});

describe("document validation", () => {
  it("zero slices shows the no-data banner", () => {
    const { root } = mount({ version: 1, meta: {}, slices: [] });
    expect(root.querySelector(".cn-banner")?.textContent).toContain("no data");
  });

  it("an unsupported version is rejected naming the expected one", () => {
    const holder = document.createElement("script");
    holder.id = "animation-data";
    holder.type = "application/json";
    holder.textContent = JSON.stringify({ version: 2, meta: {}, slices: [] });
    document.body.appendChild(holder);
    const root = document.createElement("div");
    document.body.appendChild(root);
    const player = Player.fromEmbeddedJson(root);
    expect(player).toBeNull();
    const banner = root.querySelector(".cn-banner.error");
    expect(banner?.textContent).toContain("version 2");
    expect(banner?.textContent).toContain("expected 1");
  });

  it("boots from embedded JSON", () => {
    const holder = document.createElement("script");
    holder.id = "animation-data";
    holder.type = "application/json";
    holder.textContent = JSON.stringify(fixtureDoc);
    document.body.appendChild(holder);
    const root = document.createElement("div");
    document.body.appendChild(root);
    const player = Player.fromEmbeddedJson(root);
    expect(player?.sliceCount).toBe(29);
  });
});
