"use strict";
(() => {
  // src/render.ts
  var SVG_NS = "http://www.w3.org/2000/svg";
  var CANVAS = 800;
  var TRANSITION_MS = 600;
  function shapePath(node) {
    const r = 12 * node.size;
    if (node.shape === "triangle") {
      const h = 0.866 * r;
      return `M 0 ${-r} L ${-h} ${0.5 * r} L ${h} ${0.5 * r} Z`;
    }
    if (node.shape === "square") {
      const s = 0.9 * r;
      return `M ${-s} ${-s} L ${s} ${-s} L ${s} ${s} L ${-s} ${s} Z`;
    }
    return `M ${-r} 0 A ${r} ${r} 0 1 0 ${r} 0 A ${r} ${r} 0 1 0 ${-r} 0 Z`;
  }
  function edgeKey(edge) {
    return `${edge.u}--${edge.v}`;
  }
  function ensureGroup(svg, className) {
    let group = svg.querySelector(`g.${className}`);
    if (!group) {
      group = svg.ownerDocument.createElementNS(SVG_NS, "g");
      group.setAttribute("class", className);
      svg.appendChild(group);
    }
    return group;
  }
  function renderSlice(svg, doc, index, selection = null, callbacks = {}) {
    const slice = doc.slices[index];
    if (!slice) return;
    svg.setAttribute("viewBox", `0 0 ${CANVAS} ${CANVAS}`);
    const edgeGroup = ensureGroup(svg, "edges");
    const nodeGroup = ensureGroup(svg, "nodes");
    if (svg.lastChild !== nodeGroup) svg.appendChild(nodeGroup);
    const positions = new Map(slice.nodes.map((n) => [n.id, n]));
    const wantedEdges = new Map(slice.edges.map((e) => [edgeKey(e), e]));
    for (const el of Array.from(edgeGroup.children)) {
      const key = el.getAttribute("data-key");
      if (!key || !wantedEdges.has(key)) el.remove();
    }
    for (const edge of slice.edges) {
      const key = edgeKey(edge);
      const a = positions.get(edge.u);
      const b = positions.get(edge.v);
      if (!a || !b) continue;
      let line = edgeGroup.querySelector(`line[data-key="${key}"]`);
      if (!line) {
        line = svg.ownerDocument.createElementNS(SVG_NS, "line");
        line.setAttribute("data-key", key);
        edgeGroup.appendChild(line);
      }
      line.setAttribute("x1", String(a.x * CANVAS));
      line.setAttribute("y1", String(a.y * CANVAS));
      line.setAttribute("x2", String(b.x * CANVAS));
      line.setAttribute("y2", String(b.y * CANVAS));
      line.setAttribute("stroke", edge.color);
      line.setAttribute("stroke-width", String(edge.width));
      line.setAttribute("stroke-opacity", "0.55");
      line.style.transition = `all ${TRANSITION_MS}ms linear`;
      line.style.cursor = "pointer";
      const selected = selection?.kind === "edge" && selection.key === key;
      line.setAttribute("class", selected ? "selected" : "");
      line.onclick = (event) => callbacks.onSelect?.({ kind: "edge", key }, edge.tooltip, event);
    }
    const wantedNodes = new Set(slice.nodes.map((n) => n.id));
    for (const el of Array.from(nodeGroup.children)) {
      const key = el.getAttribute("data-key");
      if (!key || !wantedNodes.has(key)) el.remove();
    }
    for (const node of slice.nodes) {
      let group = nodeGroup.querySelector(`g[data-key="${node.id}"]`);
      let path;
      if (!group) {
        group = svg.ownerDocument.createElementNS(SVG_NS, "g");
        group.setAttribute("data-key", node.id);
        path = svg.ownerDocument.createElementNS(SVG_NS, "path");
        group.appendChild(path);
        nodeGroup.appendChild(group);
      } else {
        path = group.querySelector("path");
      }
      group.setAttribute(
        "transform",
        `translate(${node.x * CANVAS}, ${node.y * CANVAS})`
      );
      group.style.transition = `transform ${TRANSITION_MS}ms linear`;
      group.style.cursor = "pointer";
      path.setAttribute("d", shapePath(node));
      path.setAttribute("fill", node.color);
      path.setAttribute("stroke", "#333333");
      path.setAttribute("stroke-width", "0.5");
      const selected = selection?.kind === "node" && selection.key === node.id;
      path.setAttribute("class", selected ? "selected" : "");
      group.onclick = (event) => callbacks.onSelect?.({ kind: "node", key: node.id }, node.tooltip, event);
    }
  }

  // src/transport.ts
  function initialState(intervalMs = 1e3) {
    return { sliceIndex: 0, playing: false, intervalMs, selection: null };
  }
  function clamp(index, sliceCount) {
    if (sliceCount <= 0) return 0;
    return Math.max(0, Math.min(index, sliceCount - 1));
  }
  function transport(state, action, sliceCount) {
    switch (action.type) {
      case "play":
        return { ...state, playing: sliceCount > 1 };
      case "pause":
        return { ...state, playing: false };
      case "seek":
        return { ...state, sliceIndex: clamp(action.index, sliceCount), selection: null };
      case "step_back":
        return { ...state, sliceIndex: clamp(state.sliceIndex - 1, sliceCount), selection: null };
      case "step_fwd":
        if (state.sliceIndex >= sliceCount - 1) {
          return { ...state, playing: false };
        }
        return { ...state, sliceIndex: state.sliceIndex + 1, selection: null };
      case "tick":
        if (!state.playing) return state;
        if (state.sliceIndex >= sliceCount - 1) {
          return { ...state, playing: false };
        }
        return { ...state, sliceIndex: state.sliceIndex + 1 };
      case "select":
        return { ...state, selection: action.selection };
    }
  }

  // src/types.ts
  var SUPPORTED_VERSION = 1;
  function parseDoc(raw) {
    if (typeof raw !== "object" || raw === null) {
      throw new Error("animation document is not an object");
    }
    const doc = raw;
    if (doc.version !== SUPPORTED_VERSION) {
      throw new Error(
        `unsupported animation document version ${String(doc.version)}; expected ${SUPPORTED_VERSION}`
      );
    }
    if (!Array.isArray(doc.slices)) {
      throw new Error("animation document has no slices array");
    }
    return doc;
  }

  // src/player.ts
  var STYLE = `
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
  var Player = class _Player {
    constructor(root, doc, intervalMs = 1e3) {
      this.timer = null;
      this.root = root;
      this.doc = doc;
      this.state = initialState(intervalMs);
      this.mount();
      this.render();
    }
    static fromEmbeddedJson(root, dataElementId = "animation-data") {
      const holder = document.getElementById(dataElementId);
      const banner = (message) => {
        const div = document.createElement("div");
        div.className = "cn-banner error";
        div.textContent = message;
        root.appendChild(div);
      };
      if (!holder || !holder.textContent) {
        banner("no animation data found in this page");
        return null;
      }
      let doc;
      try {
        doc = parseDoc(JSON.parse(holder.textContent));
      } catch (err) {
        banner(`cannot load animation: ${err instanceof Error ? err.message : String(err)}`);
        return null;
      }
      return new _Player(root, doc);
    }
    get sliceCount() {
      return this.doc.slices.length;
    }
    dispatch(action) {
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
    mount() {
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
      this.svg = doc.createElementNS("http://www.w3.org/2000/svg", "svg");
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
      this.playButton.addEventListener(
        "click",
        () => this.dispatch({ type: this.state.playing ? "pause" : "play" })
      );
      back.addEventListener("click", () => this.dispatch({ type: "step_back" }));
      fwd.addEventListener("click", () => this.dispatch({ type: "step_fwd" }));
      this.seek.addEventListener(
        "input",
        () => this.dispatch({ type: "seek", index: Number(this.seek.value) })
      );
    }
    showTooltip(selection, text, event) {
      this.dispatch({ type: "select", selection });
      this.tooltip.textContent = text;
      this.tooltip.hidden = false;
      this.tooltip.style.left = `${event.pageX + 10}px`;
      this.tooltip.style.top = `${event.pageY + 10}px`;
    }
    render() {
      if (this.sliceCount === 0) return;
      const index = this.state.sliceIndex;
      const slice = this.doc.slices[index];
      renderSlice(this.svg, this.doc, index, this.state.selection, {
        onSelect: (selection, text, event) => this.showTooltip(selection, text, event)
      });
      if (this.state.selection === null) {
        this.tooltip.hidden = true;
      }
      this.label.textContent = `day ${slice.day} \xB7 slice ${index + 1}/${this.sliceCount}`;
      this.seek.value = String(index);
      this.playButton.textContent = this.state.playing ? "Pause" : "Play";
    }
  };

  // src/index.ts
  function boot() {
    const root = document.getElementById("player-root") ?? (() => {
      const div = document.createElement("div");
      div.id = "player-root";
      document.body.appendChild(div);
      return div;
    })();
    window.chatternetPlayer = Player.fromEmbeddedJson(root);
  }
  if (document.readyState === "loading") {
    document.addEventListener("DOMContentLoaded", boot);
  } else {
    boot();
  }
})();
