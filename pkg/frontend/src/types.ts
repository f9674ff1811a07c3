// Wire types mirroring the matselect HTTP API. The UI performs no domain
// math: every number rendered comes from one of these documents.

export interface SchemaDoc {
  format: string;
  version: number;
  class_labels: string[];
  categorical: { name: string; levels: string[] }[];
  numeric: { name: string; unit: string }[];
}

export interface PredictionDoc {
  predicted: string;
  posteriors: Record<string, number | null>;
  log_scores: Record<string, number | null>;
}

export interface SelectionResultDoc {
  material_id: string;
  r: number | null;
  status: string;
  rank: number | null;
}

export interface ComparisonRowDoc {
  attribute: string;
  unit: string;
  requirement: number;
  material: number;
}

export interface PipelineDoc {
  prediction: PredictionDoc;
  class_member_count: number;
  results: SelectionResultDoc[];
  optimal: string | null;
  comparison: ComparisonRowDoc[] | null;
}

export interface MaterialSummary {
  id: string;
  name: string;
  class: string | null;
  numeric_attrs: string[];
}

export interface HealthDoc {
  status: string;
  records: number;
  classes: string[];
}

export interface SelectionParamsDoc {
  threshold?: number;
  min_overlap?: number;
  top_k?: number | null;
  normalize?: boolean;
}

export interface RequirementBody {
  categorical: Record<string, string>;
  numeric: Record<string, number>;
  params?: SelectionParamsDoc;
}
