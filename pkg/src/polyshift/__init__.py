"""Exact computation with monomial ideals, discrete polymatroids and the
homological shift ideals of their powers.

Convention used throughout: associated primes always mean Ass(S/I), the
associated primes of the quotient ring, so membership of the graded maximal
ideal is equivalent to depth S/I = 0.
"""

__version__ = "0.1.0"

from .errors import IdealParseError, NoLinearQuotientsError, ResourceBudgetError
from .monomials import (
    MonomialIdeal,
    format_ideal,
    format_monomial,
    maximal_ideal,
    minimalize,
    monomials_of_degree,
    parse_ideal,
    parse_monomial,
    principal,
)
from .polymatroids import (
    DiscretePolymatroid,
    Graph,
    MobiusTable,
    box_polymatroid,
    check_strong_exchange,
    check_symmetric_exchange,
    complete_multipartite,
    complement_clique_partition,
    edge_ideal,
    exchange_violation,
    is_complete_multipartite,
    is_componentwise_polymatroidal,
    is_matroidal,
    is_polymatroidal,
    mobius_hs_membership,
    principal_borel,
    veronese,
)
from .resolution import (
    LinearQuotientsData,
    MultigradedBetti,
    betti,
    depth_quotient,
    has_linear_resolution,
    hs,
    hs1_lcm,
    hs1_polymatroidal,
    hs_from_tor,
    koszul_tor,
    lcm_lattice,
    lex_linear_quotients,
    pd,
    reg_linear,
    regularity_via_tor,
    resolve_linear_quotients,
    search_linear_quotients,
    set_u_multipartite,
)
from .primes import (
    AssResult,
    ass,
    height,
    localize,
    minimal_primes,
    prime_ideal,
    v_number,
    v_p,
)
from .laws import LAWS, LawVerdict, reverify, run_law
from .generators import FAMILIES, InstanceRecipe, generate
from .campaign import CampaignConfig, CampaignReport, run_campaign
