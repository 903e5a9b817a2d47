// @vitest-environment jsdom
import { beforeEach, describe, expect, it, vi } from 'vitest';

import { ApiClient } from '../src/api.js';
import { initApp, type App } from '../src/app.js';

const downloads: Array<{ bytes: string; filename: string }> = [];

vi.mock('../src/download.js', async (importOriginal) => {
  const original = await importOriginal<typeof import('../src/download.js')>();
  return {
    exportFilename: original.exportFilename,
    triggerDownload: vi.fn(async (blob: Blob, filename: string) => {
      downloads.push({ bytes: await blob.text(), filename });
    }),
  };
});

const STRUCTURES = [
  {
    pattern_id: 'det+Text+gen+N1a',
    label: 'determinante+Text+determinante genitivo+actante N1aG',
    arity: 'mono',
    grade: 'TypeI_prototypical',
  },
  {
    pattern_id: 'det+arg5c+head+gen+N1a',
    label: 'determinante+actante A5N+Text+determinante genitivo+actante N1aG',
    arity: 'bi',
    grade: 'ungraded',
  },
];

const PACKAGES: Record<string, unknown[]> = {
  a: [
    {
      class: 'intellektuelles.kommunikation.mitteilung',
      slot: '5.2',
      preview: 'der Bemerkungstext der Akademikerin',
      number: 'both',
      members: ['Bemerkung', 'Lösung'],
      grade: 'ungraded',
    },
  ],
  b: [
    {
      class: 'belebt.menschlich.beruf.ausbildung',
      slot: '1.1',
      preview: 'der (kurze) Text des (bekannten) Akademikers',
      number: 'both',
      members: ['Akademikerin', 'Akademiker'],
      grade: 'ungraded',
    },
  ],
};

const PHRASES = [
  'der Bemerkungstext der Akademikerin',
  'die Lösungstexte des Gastprofessors',
  'der Antworttext der Englischlehrer',
];

const EXPORT_JSON = JSON.stringify(PHRASES.map((text) => ({ text })), null, 2);

let generateStatus = 200;

function apiResponse(url: string): Response {
  const parsed = new URL(url, 'http://api.test');
  const json = (payload: unknown, status = 200) =>
    new Response(JSON.stringify(payload), {
      status,
      headers: { 'content-type': 'application/json' },
    });
  switch (parsed.pathname) {
    case '/v1/languages':
      return json({ languages: ['de', 'es', 'fr'] });
    case '/v1/nouns':
      return json({ nouns: parsed.searchParams.get('lang') === 'de' ? ['Schmerz', 'Text'] : ['texto'] });
    case '/v1/structures':
      return json({ structures: parsed.searchParams.get('noun') === 'Text' ? STRUCTURES : [] });
    case '/v1/packages':
      return json({ packages: PACKAGES[parsed.searchParams.get('slot') ?? 'a'] ?? [] });
    case '/v1/generate':
      if (generateStatus !== 200) {
        return json({ error: 'package_mismatch', message: 'arity mismatch' }, generateStatus);
      }
      return json({
        phrases: PHRASES.map((text) => ({
          text,
          pattern_id: 'det+arg5c+head+gen+N1a',
          slots: {},
          scores: { frequencies: {}, similarity: 0.7 },
        })),
        stats: { generated: 288, filtered: 0, truncated: 285 },
      });
    case '/v1/export':
      return new Response(EXPORT_JSON, {
        status: 200,
        headers: { 'content-type': 'application/json' },
      });
    default:
      return json({ error: 'not_found', message: url }, 404);
  }
}

function select(element: HTMLSelectElement, value: string): void {
  element.value = value;
  element.dispatchEvent(new Event('change', { bubbles: true }));
}

function click(element: HTMLElement): void {
  element.dispatchEvent(new MouseEvent('click', { bubbles: true }));
}

async function mountApp(): Promise<App> {
  const root = document.createElement('div');
  document.body.appendChild(root);
  const app = initApp(root, new ApiClient('http://api.test'));
  await app.idle();
  return app;
}

async function selectCascade(app: App): Promise<void> {
  select(app.root.querySelector('[data-role=language]')!, 'de');
  await app.idle();
  select(app.root.querySelector('[data-role=noun]')!, 'Text');
  await app.idle();
  select(app.root.querySelector('[data-role=structure]')!, 'det+arg5c+head+gen+N1a');
  await app.idle();
}

beforeEach(() => {
  document.body.innerHTML = '';
  downloads.length = 0;
  generateStatus = 200;
  vi.stubGlobal('fetch', async (url: RequestInfo | URL) => apiResponse(String(url)));
});

describe('selection cascade', () => {
  it('populates dropdowns from the API and shows previews verbatim', async () => {
    const app = await mountApp();
    const language = app.root.querySelector('[data-role=language]') as HTMLSelectElement;
    expect([...language.options].map((o) => o.value)).toEqual(['', 'de', 'es', 'fr']);

    await selectCascade(app);
    const structure = app.root.querySelector('[data-role=structure]') as HTMLSelectElement;
    const optionValues = [...structure.options].map((o) => o.value);
    expect(optionValues).toContain('det+Text+gen+N1a');
    expect(optionValues).toContain('det+arg5c+head+gen+N1a');

    const previews = [...app.root.querySelectorAll('.preview')].map((n) => n.textContent);
    expect(previews).toContain('der (kurze) Text des (bekannten) Akademikers');
  });

  it('changing the noun clears structure and packages', async () => {
    const app = await mountApp();
    await selectCascade(app);
    expect(app.getState().patternId).toBe('det+arg5c+head+gen+N1a');
    expect(app.root.querySelectorAll('[data-role=package]').length).toBeGreaterThan(0);

    select(app.root.querySelector('[data-role=noun]')!, 'Schmerz');
    await app.idle();
    expect(app.getState().patternId).toBeNull();
    expect(app.getState().packages).toEqual({ a: [], b: [] });
    const structure = app.root.querySelector('[data-role=structure]') as HTMLSelectElement;
    expect(structure.value).toBe('');
    expect(app.root.querySelectorAll('[data-role=package]').length).toBe(0);
  });

  it('keeps generate disabled until every slot has a selection', async () => {
    const app = await mountApp();
    await selectCascade(app);
    const generate = app.root.querySelector('[data-role=generate]') as HTMLButtonElement;
    expect(generate.disabled).toBe(true);

    const checkboxes = app.root.querySelectorAll<HTMLInputElement>('[data-role=package]');
    checkboxes[0].click();
    await app.idle();
    expect(generate.disabled).toBe(true); // slot b still empty

    const slotB = app.root.querySelector<HTMLInputElement>(
      '[data-role=package][data-slot=b]',
    )!;
    slotB.click();
    await app.idle();
    expect(generate.disabled).toBe(false);
  });
});

describe('generation and export', () => {
  async function readyApp(): Promise<App> {
    const app = await mountApp();
    await selectCascade(app);
    app.root.querySelector<HTMLInputElement>('[data-role=package][data-slot=a]')!.click();
    app.root.querySelector<HTMLInputElement>('[data-role=package][data-slot=b]')!.click();
    await app.idle();
    return app;
  }

  it('renders phrases in API order with stats', async () => {
    const app = await readyApp();
    click(app.root.querySelector('[data-role=generate]')!);
    await app.idle();
    const items = [...app.root.querySelectorAll('[data-role=phrases] li')].map(
      (li) => li.textContent,
    );
    expect(items).toEqual(PHRASES);
    expect(items[0]).toBe('der Bemerkungstext der Akademikerin');
    expect(app.root.querySelector('[data-role=stats]')!.textContent).toContain('generated 288');
  });

  it('limit slider at 0 yields an empty list with a zero notice', async () => {
    const app = await readyApp();
    const limit = app.root.querySelector('[data-role=limit]') as HTMLInputElement;
    limit.value = '0';
    limit.dispatchEvent(new Event('input', { bubbles: true }));
    vi.stubGlobal('fetch', async (url: RequestInfo | URL) => {
      const parsed = new URL(String(url), 'http://api.test');
      if (parsed.pathname === '/v1/generate') {
        return new Response(
          JSON.stringify({ phrases: [], stats: { generated: 288, filtered: 0, truncated: 288 } }),
          { status: 200, headers: { 'content-type': 'application/json' } },
        );
      }
      return apiResponse(String(url));
    });
    click(app.root.querySelector('[data-role=generate]')!);
    await app.idle();
    expect(app.root.querySelectorAll('[data-role=phrases] li').length).toBe(0);
    expect(app.root.querySelector('[data-role=stats]')!.textContent).toContain('0 phrases');
  });

  it('a server 4xx shows the banner and keeps the selections', async () => {
    const app = await readyApp();
    generateStatus = 422;
    click(app.root.querySelector('[data-role=generate]')!);
    await app.idle();
    const banner = app.root.querySelector('[data-role=error]') as HTMLElement;
    expect(banner.classList.contains('hidden')).toBe(false);
    expect(banner.textContent).toContain('package_mismatch');
    expect(app.getState().patternId).toBe('det+arg5c+head+gen+N1a');
    expect(app.getState().packages.a.length).toBe(1);
  });

  it('export buttons are disabled before the first generation', async () => {
    const app = await readyApp();
    expect(
      (app.root.querySelector('[data-role=export-json]') as HTMLButtonElement).disabled,
    ).toBe(true);
    expect(
      (app.root.querySelector('[data-role=export-csv]') as HTMLButtonElement).disabled,
    ).toBe(true);
  });

  it('downloads the byte-exact export payload under <noun>_<pattern>.json', async () => {
    const app = await readyApp();
    click(app.root.querySelector('[data-role=generate]')!);
    await app.idle();
    click(app.root.querySelector('[data-role=export-json]')!);
    await app.idle();
    expect(downloads).toHaveLength(1);
    expect(downloads[0].filename).toBe('Text_det+arg5c+head+gen+N1a.json');
    expect(downloads[0].bytes).toBe(EXPORT_JSON);
  });

  it('never assembles phrase strings client-side', async () => {
    const app = await readyApp();
    click(app.root.querySelector('[data-role=generate]')!);
    await app.idle();
    const shown = [...app.root.querySelectorAll('[data-role=phrases] li')].map(
      (li) => li.textContent,
    );
    for (const text of shown) {
      expect(PHRASES).toContain(text); // every string originated from the API
    }
  });
});
