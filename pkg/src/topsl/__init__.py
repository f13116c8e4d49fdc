"""Finite topologized semilattices: derived topologies, separation
properties, exhaustive rule sweeps, and counterexample search."""

from .core import (
    FinitePoset,
    FiniteSemigroup,
    FiniteSemilattice,
    MalformedTableError,
    NotABandError,
    NotASemilatticeError,
    natural_order,
)
from .topo import FiniteTopology, discrete, generate_topology, indiscrete
from .tsl import ContinuousHom, TopologizedSemigroup, chain_semilattice
from .weak import (
    TOPOLOGY_NAMES,
    TopologyBundle,
    interval_topology,
    law_topology,
    lawson_topology,
    scott_topology,
    topology_comparison,
    weak_topology,
    zar_topology,
)
from .props import PROPERTY_NAMES, PropertyVector, property_vector
from .verify import (
    CounterexampleRecord,
    SweepReport,
    canonical_hash,
    canonicalize,
    enumerate_posets,
    enumerate_semilattices,
    enumerate_topologies,
    functorial_audit,
    product_audit,
    search,
    sweep,
)
from .cli import export_dot, parse_instance, serialize

__version__ = "0.1.0"

__all__ = [
    "ContinuousHom",
    "CounterexampleRecord",
    "FinitePoset",
    "FiniteSemigroup",
    "FiniteSemilattice",
    "FiniteTopology",
    "MalformedTableError",
    "NotABandError",
    "NotASemilatticeError",
    "PROPERTY_NAMES",
    "PropertyVector",
    "SweepReport",
    "TOPOLOGY_NAMES",
    "TopologizedSemigroup",
    "TopologyBundle",
    "canonical_hash",
    "canonicalize",
    "chain_semilattice",
    "discrete",
    "enumerate_posets",
    "enumerate_semilattices",
    "enumerate_topologies",
    "export_dot",
    "functorial_audit",
    "generate_topology",
    "indiscrete",
    "interval_topology",
    "law_topology",
    "lawson_topology",
    "natural_order",
    "parse_instance",
    "product_audit",
    "property_vector",
    "scott_topology",
    "search",
    "serialize",
    "sweep",
    "topology_comparison",
    "weak_topology",
    "zar_topology",
]
