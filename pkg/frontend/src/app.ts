// DOM wiring of the decision loop: language > noun > structure > semantic
// packages > generate > export. Every linguistic string on screen (class
// labels, previews, phrases) comes verbatim from an API response.

import { ApiClient, ApiError } from './api.js';
import { exportFilename, triggerDownload } from './download.js';
import * as state from './state.js';
import type { UiState } from './state.js';
import type { ExportFormat, SemanticPackage, SlotKey, StructureInfo } from './types.js';

interface Menus {
  languages: string[];
  nouns: string[];
  structures: StructureInfo[];
  packages: Record<SlotKey, SemanticPackage[]>;
}

export interface App {
  root: HTMLElement;
  getState(): UiState;
  getMenus(): Menus;
  /** resolves when all fetches triggered so far have settled */
  idle(): Promise<void>;
}

const SLOT_TITLES: Record<SlotKey, string> = {
  a: 'Semantic packages - first argument',
  b: 'Semantic packages - second argument',
};

export function initApp(root: HTMLElement, client: ApiClient): App {
  let current = state.initialState();
  const menus: Menus = { languages: [], nouns: [], structures: [], packages: { a: [], b: [] } };
  let tasks: Promise<unknown> = Promise.resolve();

  root.innerHTML = `
    <header class="bar">
      <h1>valgen</h1>
      <p class="tagline">valency-driven noun-phrase generation</p>
    </header>
    <div class="banner hidden" data-role="error"></div>
    <section class="selectors">
      <label>Language
        <select data-role="language" disabled><option value="">-</option></select>
      </label>
      <label>Noun
        <select data-role="noun" disabled><option value="">-</option></select>
      </label>
      <label>Structure
        <select data-role="structure" disabled><option value="">-</option></select>
      </label>
    </section>
    <section class="packages" data-role="packages"></section>
    <section class="controls">
      <label class="limit">Phrase limit: <output data-role="limit-value">20</output>
        <input type="range" min="0" max="100" value="20" data-role="limit">
      </label>
      <label class="threshold">Compatibility threshold
        <input type="number" min="-1" max="1" step="0.05" value="0.25" data-role="threshold">
      </label>
      <button data-role="generate" disabled>Generate</button>
      <button data-role="export-json" disabled>Export JSON</button>
      <button data-role="export-csv" disabled>Export CSV</button>
    </section>
    <section class="results">
      <p class="stats hidden" data-role="stats"></p>
      <ol data-role="phrases"></ol>
    </section>
  `;

  const el = {
    error: root.querySelector('[data-role=error]') as HTMLElement,
    language: root.querySelector('[data-role=language]') as HTMLSelectElement,
    noun: root.querySelector('[data-role=noun]') as HTMLSelectElement,
    structure: root.querySelector('[data-role=structure]') as HTMLSelectElement,
    packages: root.querySelector('[data-role=packages]') as HTMLElement,
    limit: root.querySelector('[data-role=limit]') as HTMLInputElement,
    limitValue: root.querySelector('[data-role=limit-value]') as HTMLOutputElement,
    threshold: root.querySelector('[data-role=threshold]') as HTMLInputElement,
    generate: root.querySelector('[data-role=generate]') as HTMLButtonElement,
    exportJson: root.querySelector('[data-role=export-json]') as HTMLButtonElement,
    exportCsv: root.querySelector('[data-role=export-csv]') as HTMLButtonElement,
    stats: root.querySelector('[data-role=stats]') as HTMLElement,
    phrases: root.querySelector('[data-role=phrases]') as HTMLOListElement,
  };

  function track<T>(promise: Promise<T>): Promise<T> {
    tasks = tasks.then(() => promise.catch(() => undefined));
    return promise;
  }

  function setError(message: string | null): void {
    el.error.textContent = message ?? '';
    el.error.classList.toggle('hidden', message === null);
  }

  function fillSelect(select: HTMLSelectElement, values: string[], selected: string | null): void {
    select.innerHTML = '';
    const blank = document.createElement('option');
    blank.value = '';
    blank.textContent = '-';
    select.appendChild(blank);
    for (const value of values) {
      const option = document.createElement('option');
      option.value = value;
      option.textContent = value;
      select.appendChild(option);
    }
    select.value = selected ?? '';
    select.disabled = values.length === 0;
  }

  function fillStructures(): void {
    el.structure.innerHTML = '';
    const blank = document.createElement('option');
    blank.value = '';
    blank.textContent = '-';
    el.structure.appendChild(blank);
    for (const info of menus.structures) {
      const option = document.createElement('option');
      option.value = info.pattern_id;
      option.textContent = `${info.label} [${info.arity}, ${info.grade}]`;
      el.structure.appendChild(option);
    }
    el.structure.value = current.patternId ?? '';
    el.structure.disabled = menus.structures.length === 0;
  }

  function renderPackages(): void {
    el.packages.innerHTML = '';
    if (!current.patternId) return;
    for (const slot of state.slotKeys(current)) {
      const box = document.createElement('fieldset');
      box.dataset.slot = slot;
      const legend = document.createElement('legend');
      legend.textContent = SLOT_TITLES[slot];
      box.appendChild(legend);

      const allLabel = document.createElement('label');
      allLabel.className = 'package all';
      const allInput = document.createElement('input');
      allInput.type = 'checkbox';
      allInput.dataset.role = 'package-all';
      allInput.dataset.slot = slot;
      allInput.checked = current.allPackages[slot];
      allInput.addEventListener('change', () => {
        update(state.setAllPackages(current, slot, allInput.checked));
      });
      allLabel.appendChild(allInput);
      allLabel.appendChild(document.createTextNode(' all classes'));
      box.appendChild(allLabel);

      for (const pkg of menus.packages[slot]) {
        const label = document.createElement('label');
        label.className = 'package';
        const input = document.createElement('input');
        input.type = 'checkbox';
        input.dataset.role = 'package';
        input.dataset.slot = slot;
        input.value = pkg.class;
        input.checked = current.allPackages[slot] || current.packages[slot].includes(pkg.class);
        input.disabled = current.allPackages[slot];
        input.addEventListener('change', () => {
          update(state.togglePackage(current, slot, pkg.class));
        });
        label.appendChild(input);
        const name = document.createElement('span');
        name.className = 'class-label';
        name.textContent = pkg.class;
        label.appendChild(name);
        const preview = document.createElement('em');
        preview.className = 'preview';
        preview.textContent = pkg.preview;
        label.appendChild(preview);
        box.appendChild(label);
      }
      el.packages.appendChild(box);
    }
  }

  function renderResults(): void {
    el.phrases.innerHTML = '';
    if (current.phrases !== null) {
      for (const phrase of current.phrases) {
        const item = document.createElement('li');
        item.textContent = phrase.text; // verbatim from the API, never assembled
        el.phrases.appendChild(item);
      }
    }
    if (current.stats !== null && current.phrases !== null) {
      const { generated, filtered, truncated } = current.stats;
      el.stats.textContent =
        `${current.phrases.length} phrases shown - generated ${generated}, ` +
        `filtered ${filtered}, truncated ${truncated}`;
      el.stats.classList.remove('hidden');
    } else {
      el.stats.classList.add('hidden');
    }
  }

  function render(): void {
    setError(current.error);
    el.limitValue.textContent = String(current.limit);
    el.limit.value = String(current.limit);
    el.threshold.value = String(current.threshold);
    el.generate.disabled = !state.canGenerate(current);
    const exportable = state.canExport(current);
    el.exportJson.disabled = !exportable;
    el.exportCsv.disabled = !exportable;
    renderPackages();
    renderResults();
  }

  function update(next: UiState): void {
    current = next;
    render();
  }

  function fail(error: unknown): void {
    const message =
      error instanceof ApiError ? `${error.code}: ${error.message}` :
      error instanceof Error ? error.message : String(error);
    update(state.failGeneration(current, message));
  }

  async function loadLanguages(): Promise<void> {
    menus.languages = await client.languages();
    fillSelect(el.language, menus.languages, current.language);
  }

  async function onLanguage(language: string | null): Promise<void> {
    update(state.selectLanguage(current, language));
    menus.nouns = [];
    menus.structures = [];
    menus.packages = { a: [], b: [] };
    fillSelect(el.noun, menus.nouns, null);
    fillStructures();
    if (!language) return;
    try {
      menus.nouns = await client.nouns(language);
      fillSelect(el.noun, menus.nouns, current.noun);
    } catch (error) {
      fail(error);
    }
  }

  async function onNoun(noun: string | null): Promise<void> {
    update(state.selectNoun(current, noun));
    menus.structures = [];
    menus.packages = { a: [], b: [] };
    fillStructures();
    if (!noun || !current.language) return;
    try {
      menus.structures = await client.structures(current.language, noun);
      fillStructures();
    } catch (error) {
      fail(error);
    }
  }

  async function onStructure(patternId: string | null): Promise<void> {
    const info = menus.structures.find((s) => s.pattern_id === patternId) ?? null;
    const arity = info ? (info.arity === 'bi' ? 'bi' : 'mono') : null;
    update(state.selectPattern(current, info ? info.pattern_id : null, arity));
    menus.packages = { a: [], b: [] };
    renderPackages();
    if (!info || !current.language || !current.noun) return;
    try {
      for (const slot of state.slotKeys(current)) {
        menus.packages[slot] = await client.packages(
          current.language, current.noun, info.pattern_id, slot,
        );
      }
      renderPackages();
    } catch (error) {
      fail(error);
    }
  }

  async function onGenerate(): Promise<void> {
    if (!state.canGenerate(current)) return;
    const body = state.requestBody(current);
    update(state.beginGeneration(current));
    try {
      const response = await client.generate(body);
      update(state.completeGeneration(current, response, body));
    } catch (error) {
      if (error instanceof DOMException && error.name === 'AbortError') {
        return; // replaced by a newer request
      }
      fail(error);
    }
  }

  async function onExport(format: ExportFormat): Promise<void> {
    if (!current.lastRequest || !current.noun || !current.patternId) return;
    try {
      const blob = await client.exportBytes(current.lastRequest, format);
      triggerDownload(blob, exportFilename(current.noun, current.patternId, format));
    } catch (error) {
      fail(error);
    }
  }

  el.language.addEventListener('change', () => track(onLanguage(el.language.value || null)));
  el.noun.addEventListener('change', () => track(onNoun(el.noun.value || null)));
  el.structure.addEventListener('change', () => track(onStructure(el.structure.value || null)));
  el.limit.addEventListener('input', () => update(state.setLimit(current, Number(el.limit.value))));
  el.threshold.addEventListener('change', () =>
    update(state.setThreshold(current, Number(el.threshold.value))));
  el.generate.addEventListener('click', () => track(onGenerate()));
  el.exportJson.addEventListener('click', () => track(onExport('json')));
  el.exportCsv.addEventListener('click', () => track(onExport('csv')));

  track(loadLanguages().catch(fail));
  render();

  return {
    root,
    getState: () => current,
    getMenus: () => menus,
    idle: async () => {
      let settled = tasks;
      // new tasks may be chained while awaiting; drain until stable
      while (true) {
        await settled;
        if (settled === tasks) return;
        settled = tasks;
      }
    },
  };
}
