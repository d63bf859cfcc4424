/**
 * Wire types for the session protocol. Field names mirror the server's
 * frozen schema (served at GET /schema); nothing here computes anything.
 */

export type Stage = "graph_creation" | "iterative" | "finalized";
export type Phase = "select_path" | "choose_amount" | "update_residual" | null;
export type ArcKind = "forward" | "backward";

export interface ResidualArc {
  tail: string;
  head: string;
  capacity: number;
  kind: ArcKind;
  origin: [string, string];
}

export interface EdgeView {
  tail: string;
  head: string;
  capacity: number;
  flow: number;
}

export interface BufferArc {
  tail: string;
  head: string;
  capacity: number;
}

export interface HistoryEntry {
  path: ResidualArc[];
  amount: number;
}

export interface Finding {
  code: string;
  message: string;
  node?: string;
  edge?: [string, string];
  expected?: number;
  actual?: number;
}

export interface Snapshot {
  stage: Stage;
  phase: Phase;
  nodes: string[];
  source: string | null;
  sink: string | null;
  positions: Record<string, [number, number]>;
  edges: EdgeView[];
  flow_value: number;
  residual: ResidualArc[];
  selected_arcs: ResidualArc[];
  pending_path: ResidualArc[] | null;
  pending_amount: number | null;
  draft_amount: number | null;
  edit_buffer: BufferArc[] | null;
  history: HistoryEntry[];
  cut_selection: string[];
  max_flow_confirmed: boolean;
  rng_seed: number;
  rng_draws: number;
}

export type Action =
  | { type: "add_node"; id: string }
  | { type: "delete_node"; id: string }
  | { type: "add_edge"; tail: string; head: string; capacity: number }
  | { type: "delete_edge"; tail: string; head: string }
  | { type: "set_capacity"; tail: string; head: string; capacity: number }
  | { type: "set_source"; id: string }
  | { type: "set_sink"; id: string }
  | { type: "move_node"; id: string; x: number; y: number }
  | { type: "import_graph"; text: string }
  | { type: "export_graph" }
  | { type: "apply_layout"; algorithm: "spring" | "layered"; width?: number; height?: number; seed?: number }
  | { type: "confirm_graph" }
  | { type: "select_arc"; tail: string; head: string }
  | { type: "deselect_arc"; tail: string; head: string }
  | { type: "validate_path" }
  | { type: "auto_path"; strategy: "random" | "shortest" | "widest" }
  | { type: "highlight_bottleneck" }
  | { type: "set_amount"; amount: number }
  | { type: "confirm_amount"; amount?: number }
  | { type: "edit_residual_arc"; tail: string; head: string; capacity: number }
  | { type: "validate_residual" }
  | { type: "auto_residual" }
  | { type: "confirm_max_flow"; value: number }
  | { type: "toggle_cut_node"; id: string }
  | { type: "validate_cut" }
  | { type: "find_min_cut" };

export interface SessionResponse {
  session_id: string;
  revision: number;
  snapshot: Snapshot;
}

export interface ActionResponse {
  session_id: string;
  revision: number;
  accepted: boolean;
  findings: Finding[];
  data: Record<string, unknown> | null;
  state_delta: { changed: Record<string, unknown> };
  snapshot: Snapshot;
}

export interface ErrorResponse {
  error: "not-found" | "conflict" | "bad-request";
  message: string;
  findings?: Finding[];
  revision?: number;
  snapshot?: Snapshot;
}
