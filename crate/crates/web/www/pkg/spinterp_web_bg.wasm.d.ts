/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const decode_random: (a: bigint, b: number, c: number, d: number, e: bigint, f: number, g: bigint) => [number, number];
export const evaluate: (a: bigint, b: number, c: number, d: number, e: number, f: bigint) => [number, number];
export const non_unique: () => [number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
