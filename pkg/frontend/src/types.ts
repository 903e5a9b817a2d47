// Wire types of the /v1 API. Linguistic labels (class paths, pattern ids,
// previews, phrases) are passed through verbatim and never assembled here.

export interface StructureInfo {
  pattern_id: string;
  label: string;
  arity: 'mono' | 'bi' | string;
  grade: string;
}

export interface PackageGrade {
  grade: string;
  representative_count: number;
  summed_count: number;
}

export interface SemanticPackage {
  class: string;
  slot: string;
  preview: string;
  number: string;
  members: string[];
  grade: PackageGrade | 'ungraded';
}

export interface PhraseScores {
  frequencies: Record<string, number>;
  similarity: number | null;
}

export interface Phrase {
  text: string;
  pattern_id: string;
  slots: Record<string, string>;
  scores: PhraseScores;
  numbers?: Record<string, string>;
  packages?: Record<string, string>;
  adjectives?: Record<string, string>;
}

export interface GenerationStats {
  generated: number;
  filtered: number;
  truncated: number;
}

export interface GenerationResponse {
  phrases: Phrase[];
  stats: GenerationStats;
}

export interface GenerationRequestBody {
  language: string;
  lemma: string;
  pattern_id: string;
  packages: Record<string, string[]>;
  limit: number;
  seed?: number;
  threshold?: number;
  include_adjectives?: boolean;
}

export type SlotKey = 'a' | 'b';

export type ExportFormat = 'json' | 'csv';
