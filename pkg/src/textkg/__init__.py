"""textkg: turn free text into filtered commonsense knowledge graphs."""

from .core.knowledge import (
    KnowledgeGraph,
    KnowledgeHead,
    KnowledgeTuple,
    ParseOptions,
    graph_set_op,
    parse_graph,
    serialize_graph,
)
from .core.relations import (
    KnowledgeRelation,
    RelationRegistry,
    build_few_shot_prompt,
    default_registry,
    register_relation,
)
from .extraction.heads import (
    ExtractedHead,
    classify_head_form,
    extract_heads,
    segment_sentences,
)
from .pipeline import PipelineConfig, infer

__version__ = "0.1.0"

__all__ = [
    "ExtractedHead",
    "KnowledgeGraph",
    "KnowledgeHead",
    "KnowledgeRelation",
    "KnowledgeTuple",
    "ParseOptions",
    "PipelineConfig",
    "RelationRegistry",
    "build_few_shot_prompt",
    "classify_head_form",
    "default_registry",
    "extract_heads",
    "graph_set_op",
    "infer",
    "parse_graph",
    "register_relation",
    "segment_sentences",
    "serialize_graph",
    "__version__",
]
