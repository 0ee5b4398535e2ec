"""Exact branching laws for packets of representations of O(p,q) restricted to O(p-1,q)."""
from .branching import (
    BranchingReport,
    OneChar,
    Spectrum,
    SpectrumEntry,
    discrete_spectrum,
    interlacing_holds,
    multiplicity,
    multiplicity_with_o1,
    packet_decomposition,
    packet_multiplicity,
    packet_partner,
    verify_packet_members,
    verify_versions,
)
from .exactnum import HalfInt, Ordering, binomial, compare, half
from .oracle import CompactRep, brute_force_harmonic_dim, classical_branching, compact_consistency
from .repmodel import (
    InfChar,
    KType,
    Packet,
    Rep,
    Signature,
    canonicalize,
    harmonic_dim,
    inf_char,
    is_regular,
    kappa,
    make_packet,
    make_rep,
    minimal_k_type,
    trivial_inf_char,
)

__version__ = "0.1.0"
