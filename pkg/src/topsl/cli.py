"""Command line front end: a JSON instance file format, property reports,
topology derivations, enumeration, the rule sweep, counterexample search,
and DOT export.

Exit codes: 0 success, 1 usage error (bad flags, unreadable file),
2 validation failure (malformed instance, bad property or rule name),
3 rule violation found by sweep.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import props, topo, tsl, verify, weak
from .core import (
    FinitePoset,
    FiniteSemigroup,
    FiniteSemilattice,
    bits,
    mask_of,
    natural_order,
    verify_semigroup,
    verify_semilattice,
)

SCHEMA_VERSION = 1

USAGE_EXIT = 1
VALIDATION_EXIT = 2
VIOLATION_EXIT = 3


class InstanceFormatError(ValueError):
    """The instance document violates the file format or its invariants."""


@dataclass(frozen=True)
class InstanceDocument:
    schema_version: int
    elements: tuple[str, ...]
    table: tuple[tuple[str, ...], ...]
    opens: tuple[frozenset, ...]
    is_meet: bool


def _set_label(names) -> str:
    return "{" + ", ".join(sorted(names)) + "}"


def parse_document(text: str) -> InstanceDocument:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise InstanceFormatError("document must be a JSON object")
    if raw.get("schema_version") != SCHEMA_VERSION:
        raise InstanceFormatError(
            f"schema_version must be {SCHEMA_VERSION}, got {raw.get('schema_version')!r}"
        )
    elements = raw.get("elements")
    if (
        not isinstance(elements, list)
        or not elements
        or not all(isinstance(e, str) for e in elements)
    ):
        raise InstanceFormatError("elements must be a nonempty list of names")
    if len(set(elements)) != len(elements):
        raise InstanceFormatError("element names must be distinct")
    is_meet = "meet" in raw
    table = raw.get("meet") if is_meet else raw.get("op")
    if table is None:
        raise InstanceFormatError("missing operation table (key 'meet' or 'op')")
    n = len(elements)
    known = set(elements)
    if not isinstance(table, list) or len(table) != n:
        raise InstanceFormatError(f"operation table must have {n} rows")
    for x, row in enumerate(table):
        if not isinstance(row, list) or len(row) != n:
            raise InstanceFormatError(f"table row {x} must have {n} entries")
        for y, v in enumerate(row):
            if v not in known:
                raise InstanceFormatError(f"unknown name {v!r} at table[{x}][{y}]")
    opens_raw = raw.get("opens")
    if not isinstance(opens_raw, list):
        raise InstanceFormatError("opens must be a list of lists of names")
    opens = []
    for i, u in enumerate(opens_raw):
        if not isinstance(u, list):
            raise InstanceFormatError(f"open set {i} must be a list of names")
        for v in u:
            if v not in known:
                raise InstanceFormatError(f"unknown name {v!r} in open set {i}")
        opens.append(frozenset(u))
    return InstanceDocument(
        SCHEMA_VERSION,
        tuple(elements),
        tuple(tuple(row) for row in table),
        tuple(opens),
        is_meet,
    )


def document_to_instance(doc: InstanceDocument) -> tsl.TopologizedSemigroup:
    index = {name: i for i, name in enumerate(doc.elements)}
    n = len(doc.elements)
    table = tuple(tuple(index[v] for v in row) for row in doc.table)
    bad = verify_semigroup(table)
    if bad:
        x, y, z = bad[0]
        names = doc.elements
        raise InstanceFormatError(
            f"table is not associative at ({names[x]}, {names[y]}, {names[z]})"
        )
    if doc.is_meet:
        failures = verify_semilattice(table)
        if failures:
            law, witness = failures[0]
            raise InstanceFormatError(
                f"meet table fails the {law} law at {witness}"
            )
        algebra: FiniteSemigroup = FiniteSemilattice(n, table)
    else:
        algebra = FiniteSemigroup(n, table)

    masks = [mask_of(index[v] for v in u) for u in doc.opens]
    present = set(masks)
    if 0 not in present:
        raise InstanceFormatError("missing empty set")
    if mask_of(range(n)) not in present:
        raise InstanceFormatError("missing full set")

    def label(mask: int) -> str:
        return _set_label(doc.elements[i] for i in bits(mask))

    for a in masks:
        for b in masks:
            if a | b not in present:
                raise InstanceFormatError(
                    f"missing union of {label(a)} and {label(b)}: {label(a | b)}"
                )
            if a & b not in present:
                raise InstanceFormatError(
                    f"missing intersection of {label(a)} and {label(b)}: {label(a & b)}"
                )
    return tsl.TopologizedSemigroup(algebra, topo.canonical(n, masks))


def parse_instance(text: str) -> tsl.TopologizedSemigroup:
    return document_to_instance(parse_document(text))


def serialize(inst: tsl.TopologizedSemigroup, names=None) -> str:
    return json.dumps(verify.instance_document(inst, names), indent=2) + "\n"


# ---------------------------------------------------------------------------
# DOT export


def _hasse_edges(poset: FinitePoset) -> list[tuple[int, int]]:
    edges = []
    for x in range(poset.n):
        for y in range(poset.n):
            if x == y or not poset.leq(x, y):
                continue
            if any(
                poset.leq(x, z) and poset.leq(z, y)
                for z in range(poset.n)
                if z not in (x, y)
            ):
                continue
            edges.append((x, y))
    return edges


def export_dot(obj, names=None) -> str:
    """Deterministic DOT rendering: the order diagram (transitive reduction)
    for posets and semilattice instances, the inclusion diagram of open sets
    for topologies."""
    if isinstance(obj, tsl.TopologizedSemigroup):
        return export_dot(natural_order(obj.algebra), names)
    if isinstance(obj, FinitePoset):
        if names is None:
            names = [f"e{i}" for i in range(obj.n)]
        lines = ["digraph order {"]
        for i in range(obj.n):
            lines.append(f'  n{i} [label="{names[i]}"];')
        for x, y in sorted(_hasse_edges(obj)):
            lines.append(f"  n{x} -> n{y};")
        lines.append("}")
        return "\n".join(lines) + "\n"
    if isinstance(obj, topo.FiniteTopology):
        if names is None:
            names = [f"e{i}" for i in range(obj.n)]
        idx = {u: i for i, u in enumerate(obj.opens)}
        rows = tuple(
            mask_of(idx[v] for v in obj.opens if u | v == v) for u in obj.opens
        )
        inclusion = FinitePoset(len(obj.opens), rows)
        lines = ["digraph opens {"]
        for i, u in enumerate(obj.opens):
            label = _set_label(names[e] for e in bits(u))
            lines.append(f'  n{i} [label="{label}"];')
        for x, y in sorted(_hasse_edges(inclusion)):
            lines.append(f"  n{x} -> n{y};")
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise TypeError(f"cannot export {type(obj).__name__} as DOT")


# ---------------------------------------------------------------------------
# subcommands


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_EXIT)


def _read_file(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        raise SystemExit(USAGE_EXIT)


def _load_named_instance(path: str):
    doc = parse_document(_read_file(path))
    return document_to_instance(doc), list(doc.elements)


def _opens_as_names(top: topo.FiniteTopology, names) -> list:
    return [[names[i] for i in bits(u)] for u in top.opens]


def _cmd_check(args) -> int:
    inst, names = _load_named_instance(args.file)
    comp = weak.topology_comparison(inst)
    pv = props.property_vector(inst, comp).as_dict()
    topologies = {
        name: _opens_as_names(getattr(comp.bundle, name), names)
        for name in weak.TOPOLOGY_NAMES
    }
    inclusion = [list(row) for row in comp.inclusion]
    if args.format == "json":
        report = {
            "schema_version": SCHEMA_VERSION,
            "properties": {k: v for k, v in sorted(pv.items())},
            "topologies": topologies,
            "inclusion_order": list(weak.TOPOLOGY_NAMES),
            "inclusion": inclusion,
        }
        print(json.dumps(report, indent=2))
    else:
        width = max(len(k) for k in pv)
        print("properties:")
        for k in sorted(pv):
            print(f"  {k:<{width}}  {str(pv[k]).lower()}")
        print("topologies:")
        for name in weak.TOPOLOGY_NAMES:
            sets = ", ".join(
                _set_label(u) for u in topologies[name]
            )
            print(f"  {name:<8}  {sets}")
        print("inclusion (row within column):")
        header = " ".join(f"{name:>8}" for name in weak.TOPOLOGY_NAMES)
        print(f"  {'':8} {header}")
        for name, row in zip(weak.TOPOLOGY_NAMES, inclusion):
            cells = " ".join(f"{'yes' if v else '.':>8}" for v in row)
            print(f"  {name:<8} {cells}")
    return 0


def _cmd_derive(args) -> int:
    inst, names = _load_named_instance(args.file)
    out = {}
    if args.topology == "generated":
        if args.subbase is None:
            print("error: --topology generated requires --subbase", file=sys.stderr)
            return USAGE_EXIT
        raw = json.loads(_read_file(args.subbase))
        index = {name: i for i, name in enumerate(names)}
        try:
            seeds = [mask_of(index[v] for v in u) for u in raw]
        except KeyError as exc:
            print(f"error: unknown name {exc} in subbase", file=sys.stderr)
            return VALIDATION_EXIT
        out["generated"] = _opens_as_names(
            topo.generate_topology(inst.n, seeds), names
        )
    else:
        derivations = {
            "tau": lambda: inst.topology,
            "law": lambda: weak.law_topology(inst),
            "zar": lambda: weak.zar_topology(inst),
            "weak": lambda: weak.weak_topology(inst),
            "scott": lambda: weak.scott_topology(natural_order(inst.algebra)),
            "lawson": lambda: weak.lawson_topology(natural_order(inst.algebra)),
            "interval": lambda: weak.interval_topology(natural_order(inst.algebra)),
        }
        wanted = (
            list(weak.TOPOLOGY_NAMES)
            if args.topology == "all"
            else [args.topology]
        )
        if args.topology == "all" and not inst.algebra.is_band:
            # order topologies need the natural order, which needs a band
            wanted = ["tau", "law", "zar", "weak"]
        for name in wanted:
            out[name] = _opens_as_names(derivations[name](), names)
    print(json.dumps(out, indent=2))
    return 0


def _cmd_enumerate(args) -> int:
    if args.what == "topologies":
        items = verify.enumerate_topologies(args.n)
        if args.count_only:
            print(len(items))
        else:
            for top in items:
                print(json.dumps([sorted(bits(u)) for u in top.opens]))
    else:
        items = verify.enumerate_semilattices(args.n)
        if args.count_only:
            print(len(items))
        else:
            for sl in items:
                print(json.dumps([list(row) for row in sl.table]))
    return 0


def _cmd_sweep(args) -> int:
    rule_ids = None
    if args.rules is not None:
        rule_ids = [
            line.strip()
            for line in _read_file(args.rules).splitlines()
            if line.strip() and not line.strip().startswith("#")
        ]
    report = verify.sweep(args.n_max, rule_ids=rule_ids, threads=args.threads)
    sys.stdout.write(report.render())
    return VIOLATION_EXIT if report.total_violations else 0


def _cmd_search(args) -> int:
    satisfy = [p for p in args.satisfy.split(",") if p] if args.satisfy else []
    record = verify.search(satisfy, args.violate, args.n_max, catalog=args.catalog)
    if record is None:
        print(f"exhausted up to n_max={args.n_max}")
    else:
        from dataclasses import asdict

        print(json.dumps(asdict(record), indent=2))
    return 0


def _cmd_export(args) -> int:
    inst, names = _load_named_instance(args.file)
    if args.what == "opens":
        text = export_dot(inst.topology, names)
    else:
        text = export_dot(inst, names)
    if args.output is None:
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="topsl", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide every property of an instance")
    p.add_argument("file")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("derive", help="emit derived topologies")
    p.add_argument("file")
    p.add_argument(
        "--topology",
        choices=("law", "zar", "weak", "scott", "lawson", "interval", "generated", "all"),
        default="all",
    )
    p.add_argument("--subbase", help="JSON file of subbase sets for --topology generated")
    p.set_defaults(func=_cmd_derive)

    p = sub.add_parser("enumerate", help="enumerate labeled structures")
    p.add_argument("--what", choices=("topologies", "semilattices"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("sweep", help="run the exhaustive rule sweep")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--rules", help="file with one rule id per line")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("search", help="search for a counterexample instance")
    p.add_argument("--satisfy", default="", help="comma-separated property names")
    p.add_argument("--violate", required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--catalog", help="append any finding to this JSONL file")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("export", help="export a DOT diagram")
    p.add_argument("file")
    p.add_argument("--what", choices=("hasse", "opens"), default="hasse")
    p.add_argument("--output")
    p.set_defaults(func=_cmd_export)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse raises SystemExit for both --help (code 0) and usage errors
        return exc.code if isinstance(exc.code, int) else USAGE_EXIT
    try:
        return args.func(args)
    except (InstanceFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return VALIDATION_EXIT
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_EXIT


if __name__ == "__main__":
    sys.exit(main())
