import { afterEach, describe, expect, it, vi } from 'vitest';

import { ApiClient, ApiError } from '../src/api.js';

const BODY = {
  language: 'de',
  lemma: 'Text',
  pattern_id: 'p',
  packages: { a: ['all'] },
  limit: 5,
};

afterEach(() => {
  vi.unstubAllGlobals();
});

function jsonResponse(payload: unknown, status = 200): Response {
  return new Response(JSON.stringify(payload), {
    status,
    headers: { 'content-type': 'application/json' },
  });
}

describe('ApiClient', () => {
  it('builds query URLs against its base', async () => {
    const calls: string[] = [];
    vi.stubGlobal('fetch', async (url: RequestInfo | URL) => {
      calls.push(String(url));
      return jsonResponse({ packages: [] });
    });
    const client = new ApiClient('http://api.test');
    await client.packages('de', 'Text', 'det+adj+Text+gen+adj+N1aG', 'a');
    expect(calls).toHaveLength(1);
    const url = new URL(calls[0]);
    expect(url.pathname).toBe('/v1/packages');
    expect(url.searchParams.get('pattern')).toBe('det+adj+Text+gen+adj+N1aG');
    expect(url.searchParams.get('slot')).toBe('a');
  });

  it('unwraps the error envelope', async () => {
    vi.stubGlobal('fetch', async () =>
      jsonResponse({ error: 'unknown_frame', message: "unknown frame ('de', 'Nix')" }, 404),
    );
    const client = new ApiClient('');
    const failure = await client.nouns('de').catch((error) => error);
    expect(failure).toBeInstanceOf(ApiError);
    expect(failure.status).toBe(404);
    expect(failure.code).toBe('unknown_frame');
  });

  it('cancels and replaces an in-flight generation', async () => {
    const seenSignals: AbortSignal[] = [];
    vi.stubGlobal('fetch', (url: RequestInfo | URL, init?: RequestInit) => {
      const signal = init?.signal as AbortSignal;
      seenSignals.push(signal);
      return new Promise<Response>((resolve, reject) => {
        signal.addEventListener('abort', () =>
          reject(new DOMException('aborted', 'AbortError')),
        );
        setTimeout(
          () => resolve(jsonResponse({ phrases: [], stats: { generated: 0, filtered: 0, truncated: 0 } })),
          5,
        );
      });
    });
    const client = new ApiClient('');
    const first = client.generate(BODY);
    const second = client.generate(BODY);
    await expect(first).rejects.toThrow('aborted');
    await expect(second).resolves.toEqual({
      phrases: [],
      stats: { generated: 0, filtered: 0, truncated: 0 },
    });
    expect(seenSignals[0].aborted).toBe(true);
    expect(seenSignals[1].aborted).toBe(false);
  });

  it('fetches export bytes untouched', async () => {
    const payload = 'text,pattern_id,slot_fillers,similarity\r\n';
    vi.stubGlobal('fetch', async (url: RequestInfo | URL) => {
      expect(String(url)).toContain('/v1/export?format=csv');
      return new Response(payload, { status: 200, headers: { 'content-type': 'text/csv' } });
    });
    const client = new ApiClient('');
    const blob = await client.exportBytes(BODY, 'csv');
    expect(await blob.text()).toBe(payload);
  });
});
