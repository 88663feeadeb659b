/* tslint:disable */
/* eslint-disable */

/**
 * Generate a random instance, decode it and describe the output list.
 */
export function decode_random(p: bigint, basis: string, b: number, d: bigint, e: number, seed: bigint): string;

export function evaluate(p: bigint, basis: string, terms: string, x: bigint): string;

/**
 * Eleven values over GF(13) explained by two different 2-sparse Chebyshev
 * polynomials, each with one error.
 */
export function non_unique(): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly decode_random: (a: bigint, b: number, c: number, d: number, e: bigint, f: number, g: bigint) => [number, number];
    readonly evaluate: (a: bigint, b: number, c: number, d: number, e: number, f: bigint) => [number, number];
    readonly non_unique: () => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
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
