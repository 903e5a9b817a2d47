// Thin typed client for the /v1 API. One generation request may be in flight
// at a time: a newer one aborts and replaces the previous.

import type {
  ExportFormat,
  GenerationRequestBody,
  GenerationResponse,
  SemanticPackage,
  StructureInfo,
} from './types.js';

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
  }
}

async function parseError(response: Response): Promise<ApiError> {
  let code = 'error';
  let message = `HTTP ${response.status}`;
  try {
    const body = await response.json();
    if (body && typeof body === 'object') {
      code = body.error ?? code;
      message = body.message ?? message;
    }
  } catch {
    // non-JSON error body: keep the status text
  }
  return new ApiError(response.status, code, message);
}

export class ApiClient {
  private inflight: AbortController | null = null;

  constructor(private readonly base: string = '') {}

  private url(path: string, params?: Record<string, string>): string {
    const query = params ? `?${new URLSearchParams(params)}` : '';
    return `${this.base}${path}${query}`;
  }

  private async getJson<T>(path: string, params?: Record<string, string>): Promise<T> {
    const response = await fetch(this.url(path, params));
    if (!response.ok) throw await parseError(response);
    return (await response.json()) as T;
  }

  async languages(): Promise<string[]> {
    const body = await this.getJson<{ languages: string[] }>('/v1/languages');
    return body.languages;
  }

  async nouns(lang: string): Promise<string[]> {
    const body = await this.getJson<{ nouns: string[] }>('/v1/nouns', { lang });
    return body.nouns;
  }

  async structures(lang: string, noun: string): Promise<StructureInfo[]> {
    const body = await this.getJson<{ structures: StructureInfo[] }>('/v1/structures', {
      lang,
      noun,
    });
    return body.structures;
  }

  async packages(
    lang: string,
    noun: string,
    pattern: string,
    slot: string,
  ): Promise<SemanticPackage[]> {
    const body = await this.getJson<{ packages: SemanticPackage[] }>('/v1/packages', {
      lang,
      noun,
      pattern,
      slot,
    });
    return body.packages;
  }

  /** POST /v1/generate; cancels and replaces any generation still in flight. */
  async generate(request: GenerationRequestBody): Promise<GenerationResponse> {
    this.inflight?.abort();
    const controller = new AbortController();
    this.inflight = controller;
    try {
      const response = await fetch(this.url('/v1/generate'), {
        method: 'POST',
        headers: { 'content-type': 'application/json' },
        body: JSON.stringify(request),
        signal: controller.signal,
      });
      if (!response.ok) throw await parseError(response);
      return (await response.json()) as GenerationResponse;
    } finally {
      if (this.inflight === controller) this.inflight = null;
    }
  }

  /** The byte-exact export payload for a previously run request. */
  async exportBytes(request: GenerationRequestBody, format: ExportFormat): Promise<Blob> {
    const response = await fetch(this.url('/v1/export', { format }), {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify(request),
    });
    if (!response.ok) throw await parseError(response);
    return response.blob();
  }
}
