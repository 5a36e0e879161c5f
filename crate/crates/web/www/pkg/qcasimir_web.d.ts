/* tslint:disable */
/* eslint-disable */

/**
 * Gram block at a positive-cone weight such as `"2,2"`.
 */
export function gram(nu: string): string;

/**
 * The 16×16 Hamiltonian at a rational `q`, e.g. `"1/2"`.
 *
 * `{"q", "values": [[exact]], "symbolic": [[...]], "weights": [[a,b]], "scale", "shift"}`
 */
export function hamiltonian_at(q: string): string;

/**
 * `⟨y, x⟩` for an f-side `y` and e-side `x`, e.g. `pair("f2 f1", "e1 e2")`.
 */
export function pair(y: string, x: string): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly gram: (a: number, b: number) => [number, number, number, number];
    readonly hamiltonian_at: (a: number, b: number) => [number, number, number, number];
    readonly pair: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
