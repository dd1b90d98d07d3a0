"""Exact Moebius inversion in filtered coalgebras, and its Rota-Baxter
extension to counter-term recursion and Birkhoff decomposition.

Everything is computed in exact rational arithmetic.  The main entry points:

* :mod:`~mobius_renorm.laurent` -- truncated Laurent series, pole part.
* :mod:`~mobius_renorm.coalgebra` -- convolution, the two inversion engines.
* :mod:`~mobius_renorm.incidence` -- posets, divisor coalgebra, classical
  arithmetic functions.
* :mod:`~mobius_renorm.bialgebra` -- characters, the T operator, antipode.
* :mod:`~mobius_renorm.renorm` -- Rota-Baxter operators, Bogoliubov and
  Atkinson counter-terms, Birkhoff pairs, finite values.
* :mod:`~mobius_renorm.trees` -- the rooted-forest bialgebra and toy
  characters.
"""

from .algebra import Algebra, LAURENT, RATIONALS
from .bialgebra import (
    BialgebraSpec,
    Character,
    antipode,
    as_character,
    bialgebra_algebra,
    convolve_characters,
    invert_via_antipode,
    is_multiplicative,
    mult_lincomb,
    t_operator,
)
from .coalgebra import (
    CoalgebraSpec,
    LinMap,
    check_coassociativity,
    check_counit_laws,
    check_standing_assumption,
    convolve,
    moebius_invert_evenodd,
    moebius_invert_recursive,
    neutral_e,
    pointwise_equal,
    zeta,
)
from .errors import (
    CycleDetected,
    InsufficientPrecision,
    MissingAssignment,
    MobiusError,
    NonCommutativeTarget,
    NotUnitOnGrouplike,
    ParseError,
    PolePresent,
    UnitNotInKerR,
)
from .incidence import (
    ArithFn,
    Poset,
    boolean_lattice,
    big_omega,
    chain_poset,
    classical_mu,
    derangements_via_ie,
    dirichlet_convolve,
    divisibility_coalgebra,
    divisors,
    eps_fn,
    finite_difference,
    interval_coalgebra,
    iota_fn,
    load_poset,
    moebius_poset,
    mu_fn,
    nat_plus_coalgebra,
    parse_poset,
    poset_from_cover_relations,
    poset_product,
    totient_via_inversion,
    zeta_fn,
)
from .laurent import (
    LaurentSeries,
    agree_on_common_window,
    eval_at_zero,
    format_laurent,
    parse_laurent,
    pole_part,
)
from .lincomb import LinComb
from .renorm import (
    BirkhoffPair,
    RotaBaxterAlgebra,
    atkinson_counterterm,
    birkhoff,
    bogoliubov_counterterm,
    bphz_value,
    convolve_R,
    counterterm_multiplicativity_check,
    identity_rb,
    pole_part_rb,
    rb_check,
)
from .trees import (
    b_plus,
    forest_bialgebra,
    forest_degree,
    forest_product,
    forest_trees,
    forests_of_degree,
    format_forest,
    load_character_file,
    parse_character_file,
    parse_forest,
    toy_character,
    tree_coproduct,
    tree_cuts,
    trees_of_degree,
)

__version__ = "0.1.0"
