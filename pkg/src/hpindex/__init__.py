"""Citation indices for researchers: h, h_q, g, e, h_x and the PI- and
author-renormalized h_PI and h_A, plus the scaling-law fits that relate them."""

from .cohort import (
    CohortTable,
    Ranking,
    build_cohort_table,
    excess_comparison,
    rank_by,
    rank_correlation,
    rank_shift,
)
from .credit import (
    RenormalizedReport,
    estimate_mean_n_pi,
    h_a_index,
    h_pi_index,
    mean_core_collaborators,
    predict_h_pi,
    predict_h_pi_from_citations,
    renormalized_report,
)
from .dataio import InputDataset, emit_dataset, emit_report, parse_dataset
from .errors import (
    ComparisonError,
    ConfigurationError,
    DomainError,
    FitError,
    HPIndexError,
    ParseError,
    ValidationError,
)
from .fitting import FitResult, fit_power_law, fit_proportional, hirsch_a, hirsch_a_histogram
from .indices import (
    CoreIndices,
    IndexReport,
    core_indices,
    core_sum,
    e_index,
    excess_sum,
    g_index,
    h_index,
    h_q_index,
    h_x_index,
    index_report,
)
from .model import (
    CitationProfile,
    CreditScheme,
    PaperRecord,
    ResearcherRecord,
    build_profile,
    total_citations,
)
from .synth import SyntheticCohortSpec, generate_synthetic_cohort

__version__ = "0.1.0"
