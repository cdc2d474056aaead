export const SUPPORTED_VERSION = 1;

export interface DocNode {
  id: string;
  x: number;
  y: number;
  size: number;
  color: string;
  shape: "circle" | "triangle" | "square";
  tooltip: string;
}

export interface DocEdge {
  u: string;
  v: string;
  color: string;
  width: number;
  tooltip: string;
}

export interface DocSlice {
  day: number;
  nodes: DocNode[];
  edges: DocEdge[];
}

export interface AnimationDoc {
  version: number;
  meta: {
    epoch?: string;
    days?: number[];
    scheme?: string;
    encodings?: string;
    [key: string]: unknown;
  };
  slices: DocSlice[];
}

export interface Selection {
  kind: "node" | "edge";
  key: string; // node id, or "u--v" for edges
}

export interface PlayerState {
  sliceIndex: number;
  playing: boolean;
  intervalMs: number;
  selection: Selection | null;
}

export type TransportAction =
  | { type: "play" }
  | { type: "pause" }
  | { type: "step_fwd" }
  | { type: "step_back" }
  | { type: "seek"; index: number }
  | { type: "tick" }
  | { type: "select"; selection: Selection | null };

export function parseDoc(raw: unknown): AnimationDoc {
  if (typeof raw !== "object" || raw === null) {
    throw new Error("animation document is not an object");
  }
  const doc = raw as AnimationDoc;
  if (doc.version !== SUPPORTED_VERSION) {
    throw new Error(
      `unsupported animation document version ${String(doc.version)}; expected ${SUPPORTED_VERSION}`,
    );
  }
  if (!Array.isArray(doc.slices)) {
    throw new Error("animation document has no slices array");
  }
  return doc;
}
