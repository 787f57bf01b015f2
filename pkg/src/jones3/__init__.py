"""Jones polynomial engine for closures of 3-strand braids.

Exact Laurent-polynomial computation, a deterministic O(L) closed-form
matrix evaluator on the unit circle, and a simulated quantum trace
estimator, cross-checked by an independent brute-force state sum.
"""

from .bracket import CapExceeded, bracket_state_sum
from .braid import (
    BraidLetter,
    BraidParseError,
    BraidWord,
    MalformedToken,
    UnknownGenerator,
    ZeroExponent,
    conjugate,
    inverse,
    parse_braid,
    to_text,
    writhe,
)
from .hadamard import (
    InvalidPrecision,
    NonUnitaryGate,
    ShotPlan,
    TraceEstimate,
    approx_im_trace,
    approx_re_trace,
    estimate_trace,
    qim_shot,
    qre_shot,
    quantum_3sb,
    shots_for,
)
from .laurent import LaurentPoly, ZeroPoint
from .rep2 import (
    PHI_MAX,
    OutsideUnitarityRegion,
    RepParams,
    classical_3sb,
    compile_gate,
    make_params,
    rep_of_tl3,
)
from .tl3 import TL3Element, jones_exact, jones_rep, markov_trace, tl_mul

__version__ = "0.1.0"
