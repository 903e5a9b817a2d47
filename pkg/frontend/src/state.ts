// UI state with the cascade invariant: changing an upstream selection resets
// everything downstream of it (language > noun > structure > packages >
// results). All transitions are pure so they can be property-tested.

import type {
  GenerationRequestBody,
  GenerationResponse,
  GenerationStats,
  Phrase,
  SlotKey,
} from './types.js';

export const LIMIT_MIN = 0;
export const LIMIT_MAX = 100;
export const DEFAULT_LIMIT = 20;
export const DEFAULT_THRESHOLD = 0.25;

export interface UiState {
  language: string | null;
  noun: string | null;
  patternId: string | null;
  arity: 'mono' | 'bi' | null;
  // multi-select per slot; `all` is the "every class" shortcut
  packages: Record<SlotKey, string[]>;
  allPackages: Record<SlotKey, boolean>;
  limit: number;
  threshold: number;
  phrases: Phrase[] | null;
  stats: GenerationStats | null;
  lastRequest: GenerationRequestBody | null;
  pending: boolean;
  error: string | null;
}

export function initialState(): UiState {
  return {
    language: null,
    noun: null,
    patternId: null,
    arity: null,
    packages: { a: [], b: [] },
    allPackages: { a: false, b: false },
    limit: DEFAULT_LIMIT,
    threshold: DEFAULT_THRESHOLD,
    phrases: null,
    stats: null,
    lastRequest: null,
    pending: false,
    error: null,
  };
}

function clearResults(state: UiState): UiState {
  return { ...state, phrases: null, stats: null, lastRequest: null, error: null };
}

function clearPackages(state: UiState): UiState {
  return clearResults({
    ...state,
    packages: { a: [], b: [] },
    allPackages: { a: false, b: false },
  });
}

export function selectLanguage(state: UiState, language: string | null): UiState {
  if (language === state.language) return state;
  return clearPackages({ ...state, language, noun: null, patternId: null, arity: null });
}

export function selectNoun(state: UiState, noun: string | null): UiState {
  if (noun === state.noun) return state;
  return clearPackages({ ...state, noun, patternId: null, arity: null });
}

export function selectPattern(
  state: UiState,
  patternId: string | null,
  arity: 'mono' | 'bi' | null,
): UiState {
  if (patternId === state.patternId) return state;
  return clearPackages({ ...state, patternId, arity: patternId ? arity : null });
}

export function slotKeys(state: UiState): SlotKey[] {
  return state.arity === 'bi' ? ['a', 'b'] : ['a'];
}

export function togglePackage(state: UiState, slot: SlotKey, classPath: string): UiState {
  const selected = state.packages[slot];
  const next = selected.includes(classPath)
    ? selected.filter((p) => p !== classPath)
    : [...selected, classPath];
  return clearResults({
    ...state,
    packages: { ...state.packages, [slot]: next },
    allPackages: { ...state.allPackages, [slot]: false },
  });
}

export function setAllPackages(state: UiState, slot: SlotKey, on: boolean): UiState {
  return clearResults({
    ...state,
    allPackages: { ...state.allPackages, [slot]: on },
    packages: { ...state.packages, [slot]: [] },
  });
}

export function setLimit(state: UiState, limit: number): UiState {
  const clamped = Math.max(LIMIT_MIN, Math.min(LIMIT_MAX, Math.round(limit)));
  return { ...state, limit: clamped };
}

export function setThreshold(state: UiState, threshold: number): UiState {
  return { ...state, threshold: Math.max(-1, Math.min(1, threshold)) };
}

export function slotComplete(state: UiState, slot: SlotKey): boolean {
  return state.allPackages[slot] || state.packages[slot].length > 0;
}

export function canGenerate(state: UiState): boolean {
  // pending generations do not disable the button: a new click cancels and
  // replaces the request in flight
  if (!state.language || !state.noun || !state.patternId) return false;
  return slotKeys(state).every((slot) => slotComplete(state, slot));
}

export function canExport(state: UiState): boolean {
  return state.lastRequest !== null && state.phrases !== null && !state.pending;
}

export function requestBody(state: UiState): GenerationRequestBody {
  if (!state.language || !state.noun || !state.patternId) {
    throw new Error('selection incomplete');
  }
  const packages: Record<string, string[]> = {};
  for (const slot of slotKeys(state)) {
    packages[slot] = state.allPackages[slot] ? ['all'] : [...state.packages[slot]];
  }
  return {
    language: state.language,
    lemma: state.noun,
    pattern_id: state.patternId,
    packages,
    limit: state.limit,
    threshold: state.threshold,
  };
}

export function beginGeneration(state: UiState): UiState {
  return { ...state, pending: true, error: null };
}

export function completeGeneration(
  state: UiState,
  response: GenerationResponse,
  request: GenerationRequestBody,
): UiState {
  return {
    ...state,
    pending: false,
    phrases: response.phrases,
    stats: response.stats,
    lastRequest: request,
    error: null,
  };
}

export function failGeneration(state: UiState, message: string): UiState {
  // selections stay intact; only the pending flag drops and the banner shows
  return { ...state, pending: false, error: message };
}

/** Structural invariants of the cascade; used by the property tests. */
export function invariantViolations(state: UiState): string[] {
  const violations: string[] = [];
  if (state.noun !== null && state.language === null) {
    violations.push('noun without language');
  }
  if (state.patternId !== null && state.noun === null) {
    violations.push('pattern without noun');
  }
  const anyPackages =
    state.packages.a.length > 0 ||
    state.packages.b.length > 0 ||
    state.allPackages.a ||
    state.allPackages.b;
  if (anyPackages && state.patternId === null) {
    violations.push('packages without pattern');
  }
  if (state.phrases !== null && state.lastRequest === null) {
    violations.push('results without their request');
  }
  if (state.limit < LIMIT_MIN || state.limit > LIMIT_MAX) {
    violations.push('limit out of slider range');
  }
  return violations;
}
