"""Direct fuzzy relational equations ``b = x o A`` under pluggable operators."""
from .composition import (ComparisonReport, FuzzyRelation, FuzzyVector, LambdaProfile, Ranking,
                          compare_to_oracle, compose_adaptive, compose_max_t, compose_s_t,
                          compose_similarity, lambda_profile, rank_alternatives)
from .diagnostics import (ColumnDiagnosis, Regime, RegimeReport, check_corollary1,
                          check_corollary2, check_lemma2_necessary, check_lemma2_sufficient,
                          classify_regime, diagnose_columns)
from .exceptions import (FuzzyRelError, GenerationError, OperatorMisuseError, ParseError,
                         RangeError, ShapeError)
from .norms import (DRASTIC_PRODUCT, DRASTIC_SUM, LUKASIEWICZ, MAX, MIN, PRODUCT, TNORMS,
                    AxiomReport, Family, Kind, OperatorSpec, UnitValue, aggregate_tconorm,
                    check_axioms, convex, parse_operator, tconorm_eval, tnorm_eval)

__version__ = "0.1.0"
