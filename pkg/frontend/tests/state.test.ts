import { describe, expect, it } from 'vitest';

import {
  DEFAULT_LIMIT,
  beginGeneration,
  canExport,
  canGenerate,
  completeGeneration,
  failGeneration,
  initialState,
  invariantViolations,
  requestBody,
  selectLanguage,
  selectNoun,
  selectPattern,
  setAllPackages,
  setLimit,
  togglePackage,
  type UiState,
} from '../src/state.js';

const RESPONSE = {
  phrases: [
    {
      text: 'der Bemerkungstext der Akademikerin',
      pattern_id: 'p',
      slots: {},
      scores: { frequencies: {}, similarity: null },
    },
  ],
  stats: { generated: 1, filtered: 0, truncated: 0 },
};

function readyBiState(): UiState {
  let s = initialState();
  s = selectLanguage(s, 'de');
  s = selectNoun(s, 'Text');
  s = selectPattern(s, 'det+arg5c+head+gen+N1a', 'bi');
  s = togglePackage(s, 'a', 'intellektuelles.kommunikation.mitteilung');
  s = togglePackage(s, 'b', 'belebt.menschlich.beruf.ausbildung');
  return s;
}

describe('cascade resets', () => {
  it('changing the noun clears pattern, packages and results', () => {
    let s = readyBiState();
    s = completeGeneration(beginGeneration(s), RESPONSE, requestBody(s));
    expect(s.phrases).not.toBeNull();
    s = selectNoun(s, 'Schmerz');
    expect(s.patternId).toBeNull();
    expect(s.packages).toEqual({ a: [], b: [] });
    expect(s.allPackages).toEqual({ a: false, b: false });
    expect(s.phrases).toBeNull();
    expect(s.stats).toBeNull();
    expect(s.lastRequest).toBeNull();
  });

  it('changing the language clears everything downstream', () => {
    const s = selectLanguage(readyBiState(), 'es');
    expect(s.noun).toBeNull();
    expect(s.patternId).toBeNull();
    expect(s.packages.a).toEqual([]);
  });

  it('changing the pattern clears package selections', () => {
    const s = selectPattern(readyBiState(), 'det+Text+gen+N1a', 'mono');
    expect(s.packages.a).toEqual([]);
    expect(s.arity).toBe('mono');
  });

  it('reselecting the same value is a no-op', () => {
    const s = readyBiState();
    expect(selectNoun(s, 'Text')).toBe(s);
    expect(selectLanguage(s, 'de')).toBe(s);
  });
});

describe('generate gating', () => {
  it('requires every slot of the arity to have packages', () => {
    let s = initialState();
    expect(canGenerate(s)).toBe(false);
    s = selectLanguage(s, 'de');
    s = selectNoun(s, 'Text');
    s = selectPattern(s, 'bi-pattern', 'bi');
    expect(canGenerate(s)).toBe(false);
    s = togglePackage(s, 'a', 'x');
    expect(canGenerate(s)).toBe(false); // slot b still empty
    s = setAllPackages(s, 'b', true);
    expect(canGenerate(s)).toBe(true);
  });

  it('mono patterns need only slot a', () => {
    let s = initialState();
    s = selectLanguage(s, 'de');
    s = selectNoun(s, 'Text');
    s = selectPattern(s, 'mono-pattern', 'mono');
    s = togglePackage(s, 'a', 'x');
    expect(canGenerate(s)).toBe(true);
  });

  it('the all shortcut maps to ["all"] in the request body', () => {
    let s = initialState();
    s = selectLanguage(s, 'de');
    s = selectNoun(s, 'Text');
    s = selectPattern(s, 'mono-pattern', 'mono');
    s = setAllPackages(s, 'a', true);
    expect(requestBody(s).packages).toEqual({ a: ['all'] });
  });
});

describe('results and errors', () => {
  it('export needs a completed generation', () => {
    let s = readyBiState();
    expect(canExport(s)).toBe(false);
    const body = requestBody(s);
    s = completeGeneration(beginGeneration(s), RESPONSE, body);
    expect(canExport(s)).toBe(true);
    expect(s.lastRequest).toEqual(body);
  });

  it('failures keep the selections and show a message', () => {
    const before = readyBiState();
    const after = failGeneration(beginGeneration(before), 'package_mismatch');
    expect(after.error).toBe('package_mismatch');
    expect(after.noun).toBe(before.noun);
    expect(after.packages).toEqual(before.packages);
    expect(after.pending).toBe(false);
  });

  it('limit stays inside the slider range', () => {
    const s = initialState();
    expect(s.limit).toBe(DEFAULT_LIMIT);
    expect(setLimit(s, 1000).limit).toBe(100);
    expect(setLimit(s, -5).limit).toBe(0);
  });
});

// deterministic PRNG for the property walk
function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a |= 0;
    a = (a + 0x6d2b79f5) | 0;
    let t = Math.imul(a ^ (a >>> 15), 1 | a);
    t = (t + Math.imul(t ^ (t >>> 7), 61 | t)) ^ t;
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

describe('property: cascade invariants hold under random transitions', () => {
  it('300 random operations never violate an invariant', () => {
    const rand = mulberry32(0xc0ffee);
    const pick = <T,>(items: T[]): T => items[Math.floor(rand() * items.length)];
    let s = initialState();
    for (let step = 0; step < 300; step += 1) {
      const op = Math.floor(rand() * 8);
      const beforeNoun = s.noun;
      switch (op) {
        case 0:
          s = selectLanguage(s, pick(['de', 'es', 'fr', null]));
          break;
        case 1:
          s = selectNoun(s, s.language ? pick(['Text', 'Schmerz', null]) : null);
          break;
        case 2:
          s = selectPattern(
            s,
            s.noun ? pick(['p1', 'p2', null]) : null,
            pick(['mono', 'bi']),
          );
          break;
        case 3:
          if (s.patternId) s = togglePackage(s, pick(['a', 'b']), pick(['k1', 'k2', 'k3']));
          break;
        case 4:
          if (s.patternId) s = setAllPackages(s, pick(['a', 'b']), rand() > 0.5);
          break;
        case 5:
          s = setLimit(s, Math.floor(rand() * 300) - 50);
          break;
        case 6:
          if (canGenerate(s)) {
            s = completeGeneration(beginGeneration(s), RESPONSE, requestBody(s));
          }
          break;
        default:
          s = failGeneration(s, 'boom');
      }
      expect(invariantViolations(s)).toEqual([]);
      if (op === 1 && s.noun !== beforeNoun) {
        expect(s.patternId).toBeNull();
        expect(s.phrases).toBeNull();
      }
    }
  });
});
