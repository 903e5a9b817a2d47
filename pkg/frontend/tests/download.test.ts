// @vitest-environment jsdom
import { describe, expect, it, vi } from 'vitest';

import { exportFilename, triggerDownload } from '../src/download.js';

describe('exportFilename', () => {
  it('joins noun and pattern id verbatim', () => {
    expect(exportFilename('Text', 'det+arg5c+head+gen+N1a', 'json')).toBe(
      'Text_det+arg5c+head+gen+N1a.json',
    );
    expect(exportFilename('Antwort', 'det+Antwort+gen+N1+auf+acc+N2', 'csv')).toBe(
      'Antwort_det+Antwort+gen+N1+auf+acc+N2.csv',
    );
  });
});

describe('triggerDownload', () => {
  it('clicks a temporary anchor pointing at the blob', () => {
    const created: string[] = [];
    vi.stubGlobal('URL', Object.assign(Object.create(URL), {
      createObjectURL: vi.fn(() => {
        created.push('blob:fake');
        return 'blob:fake';
      }),
      revokeObjectURL: vi.fn(),
    }));
    const clicks: string[] = [];
    const originalCreate = document.createElement.bind(document);
    vi.spyOn(document, 'createElement').mockImplementation((tag: string) => {
      const element = originalCreate(tag) as HTMLAnchorElement;
      if (tag === 'a') {
        element.click = () => clicks.push(element.download);
      }
      return element;
    });

    triggerDownload(new Blob(['payload']), 'Text_p.json');
    expect(created).toEqual(['blob:fake']);
    expect(clicks).toEqual(['Text_p.json']);
    expect(document.querySelector('a')).toBeNull(); // cleaned up

    vi.restoreAllMocks();
    vi.unstubAllGlobals();
  });
});
