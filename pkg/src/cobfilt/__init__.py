"""Exact graded dimension counts for a stagewise filtration of the
unoriented cobordism ring: the degree/stage bijection, loop-space
homology models, Thom-complex series, and cup-construction recipes for
every polynomial generator, with brute-force verification oracles.
"""

from .checks import (
    CheckReport,
    Discrepancy,
    partition_dp,
    verify_bijection,
    verify_main_theorem,
    verify_quotient_steps,
    verify_simple_systems,
)
from .degrees import (
    BASE,
    BaseStageError,
    DegreeTooSmallError,
    ExcludedDegreeError,
    GeneratorTable,
    StageTriple,
    TableEntry,
    cmp_triples,
    compose,
    decompose,
    is_excluded,
    stages_up_to_degree,
)
from .manifolds import (
    CupRecipe,
    Justification,
    RuleNotApplicableError,
    expand,
    indecomposable,
    parse_term,
    plan,
    recipe_dimension,
)
from .series import (
    U64_MAX,
    AlgebraSpec,
    Generator,
    GeneratorKind,
    NotDivisibleError,
    TruncatedSeries,
    exact_div,
    mul,
    series_of,
    simple_system_series,
)
from .spaces import (
    DegreeOneGeneratorError,
    EvenSphereDimensionError,
    LoopRuleError,
    MilnorMonomial,
    NonExteriorInputError,
    NonPolynomialInputError,
    adams_homotopy_series,
    double_loop_algebra,
    dual_steenrod_spec,
    james_loop_homology,
    loop_algebra,
    milnor_monomials,
    sp_homology,
    stage_generator_degrees,
    steenrod_series,
    thom_homology_series,
)

__version__ = "0.1.0"
