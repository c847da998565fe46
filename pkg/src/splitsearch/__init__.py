"""Text retrieval with signed term weights over a split-complex algebra.

Documents and queries carry a positive and a negative weight per term,
embed as elements of a 2N-dimensional commutative hypercomplex algebra
(N split-complex blocks), and rank by the evaluation of their product.
Query-side negation, fuzzy expansion, and synonym expansion all reduce
to placing weight on one side or the other.
"""

from .algebra import (
    HyperNumber,
    MultiplicationTable,
    SignedProjection,
    add,
    build_ir_table,
    est,
    matrix_rep,
    mul,
    scale,
    sim,
    sim1,
    signed_projection,
    unit_element,
)
from .config import EngineConfig
from .index import (
    Explanation,
    ExplanationRow,
    InvertedIndex,
    ScoredHit,
    baseline_cosine,
    build_index,
    evaluate,
    explain,
    index_corpus,
    run_query,
    score,
    score_oracle,
)
from .query import (
    Clause,
    HyperQuery,
    QueryAST,
    QueryParseError,
    SynonymTable,
    compile_query,
    damerau_levenshtein,
    expand_fuzzy,
    expand_synonyms,
    load_synonyms,
    parse_query,
)
from .storage import (
    IndexCorruptError,
    IndexStorageError,
    IndexVersionError,
    load_index,
    save_index,
)
from .weighting import (
    DocumentRecord,
    Vocabulary,
    WeightedDoc,
    build_vocabulary,
    read_corpus,
    to_hypernumber,
    tokenize,
    weigh_document,
    weights_to_hypernumber,
)

__version__ = "0.1.0"
