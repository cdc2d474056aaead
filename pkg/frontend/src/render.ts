import type { AnimationDoc, DocEdge, DocNode, Selection } from "./types";

const SVG_NS = "http://www.w3.org/2000/svg";
export const CANVAS = 800;
export const TRANSITION_MS = 600;

export interface RenderCallbacks {
  onSelect?: (selection: Selection, tooltip: string, event: MouseEvent) => void;
}

function shapePath(node: DocNode): string {
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

function edgeKey(edge: DocEdge): string {
  return `${edge.u}--${edge.v}`;
}

function ensureGroup(svg: SVGSVGElement, className: string): SVGGElement {
  let group = svg.querySelector<SVGGElement>(`g.${className}`);
  if (!group) {
    group = svg.ownerDocument.createElementNS(SVG_NS, "g") as SVGGElement;
    group.setAttribute("class", className);
    svg.appendChild(group);
  }
  return group;
}

/**
 * Keyed update of the scene: elements for ids that persist between
 * slices are reused so CSS transitions interpolate their positions;
 * departed elements are removed, new ones created. Rendering the same
 * (doc, index, selection) twice leaves the DOM unchanged.
 */
export function renderSlice(
  svg: SVGSVGElement,
  doc: AnimationDoc,
  index: number,
  selection: Selection | null = null,
  callbacks: RenderCallbacks = {},
): void {
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
    let line = edgeGroup.querySelector<SVGLineElement>(`line[data-key="${key}"]`);
    if (!line) {
      line = svg.ownerDocument.createElementNS(SVG_NS, "line") as SVGLineElement;
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
    line.onclick = (event) =>
      callbacks.onSelect?.({ kind: "edge", key }, edge.tooltip, event as MouseEvent);
  }

  const wantedNodes = new Set(slice.nodes.map((n) => n.id));
  for (const el of Array.from(nodeGroup.children)) {
    const key = el.getAttribute("data-key");
    if (!key || !wantedNodes.has(key)) el.remove();
  }
  for (const node of slice.nodes) {
    let group = nodeGroup.querySelector<SVGGElement>(`g[data-key="${node.id}"]`);
    let path: SVGPathElement;
    if (!group) {
      group = svg.ownerDocument.createElementNS(SVG_NS, "g") as SVGGElement;
      group.setAttribute("data-key", node.id);
      path = svg.ownerDocument.createElementNS(SVG_NS, "path") as SVGPathElement;
      group.appendChild(path);
      nodeGroup.appendChild(group);
    } else {
      path = group.querySelector("path") as SVGPathElement;
    }
    group.setAttribute(
      "transform",
      `translate(${node.x * CANVAS}, ${node.y * CANVAS})`,
    );
    group.style.transition = `transform ${TRANSITION_MS}ms linear`;
    group.style.cursor = "pointer";
    path.setAttribute("d", shapePath(node));
    path.setAttribute("fill", node.color);
    path.setAttribute("stroke", "#333333");
    path.setAttribute("stroke-width", "0.5");
    const selected = selection?.kind === "node" && selection.key === node.id;
    path.setAttribute("class", selected ? "selected" : "");
    group.onclick = (event) =>
      callbacks.onSelect?.({ kind: "node", key: node.id }, node.tooltip, event as MouseEvent);
  }
}
