"""Exact symmetric-function computations for delta operators at t = 0."""

from .errors import (
    DegreeOverflowError,
    DeltaqError,
    InexactDivisionError,
    NegativityError,
    RangeError,
    SizeMismatchError,
    VanishingDenominatorError,
)
from .qarith import QLaurent, pochhammer, q_binomial, q_factorial, q_int, q_multinomial, reverse_coeffs
from .partitions import Partition, conjugate, dominates, enumerate_partitions
from .tableaux import Tableau, charge, enumerate_ssyt, kostka_foulkes, kostka_number, principal_spec_schur
from .symfun import BiSymFunc, SymFunc, e_multiply, e_perp, hall_inner, omega, qprime, rev_q_sym
from .osp import OrderedSetPartition, c_via_osp, c_via_qprime, d_poly, enumerate_osp, ides, inv, reading_word
from .delta import (
    delta_prime_elem_t0,
    delta_prime_schur_t0,
    delta_unprimed_schur_t0,
    grfrob_R_nnu,
    grfrob_V,
    p_coeff,
    theorem12_rhs,
)
from .hypergeo import QRatFunc, phi32

__version__ = "0.1.0"
