import type { PlayerState, TransportAction } from "./types";

export function initialState(intervalMs = 1000): PlayerState {
  return { sliceIndex: 0, playing: false, intervalMs, selection: null };
}

function clamp(index: number, sliceCount: number): number {
  if (sliceCount <= 0) return 0;
  return Math.max(0, Math.min(index, sliceCount - 1));
}

/** Pure state transition; never mutates its input. */
export function transport(
  state: PlayerState,
  action: TransportAction,
  sliceCount: number,
): PlayerState {
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
