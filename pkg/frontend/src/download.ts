import type { ExportFormat } from './types.js';

export function exportFilename(noun: string, patternId: string, format: ExportFormat): string {
  return `${noun}_${patternId}.${format}`;
}

export function triggerDownload(blob: Blob, filename: string, doc: Document = document): void {
  const url = URL.createObjectURL(blob);
  const anchor = doc.createElement('a');
  anchor.href = url;
  anchor.download = filename;
  doc.body.appendChild(anchor);
  anchor.click();
  anchor.remove();
  URL.revokeObjectURL(url);
}
