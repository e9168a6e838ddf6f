"""Data model and name resolution for user-authored ontology suites.

Declarations are plain frozen dataclasses, shared between the parser (which
builds them with real source spans) and programmatic construction (tests,
generators). `resolve` binds every reference or reports E1xx diagnostics;
a `ResolvedSuite` is immutable afterwards and safe for concurrent reads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Iterable, Iterator

from . import metamodel
from .metamodel import BUILTIN_MODULE, RootKind
from .reporting import Diagnostic
from .source import SourceSpan, synthetic_span


class Level(Enum):
    """The five tiers; lower rank = more abstract. Modules never sit at IO:
    the instance level is populated by instance files only."""

    FO = 0
    CO = 1
    TDO = 2
    LDO = 3
    IO = 4

    @property
    def rank(self) -> int:
        return self.value

    def is_exactly_above(self, other: "Level") -> bool:
        """True iff self is exactly one tier more abstract than `other`."""
        return self.rank == other.rank - 1


MODULE_LEVELS = (Level.FO, Level.CO, Level.TDO, Level.LDO)


@dataclass(frozen=True)
class QualifiedRef:
    """A `Module.Name` or bare `Name` reference; bare names resolve in the
    declaring module (or the instance file's module)."""

    module: str | None
    name: str
    span: SourceSpan = field(compare=False, default_factory=synthetic_span)

    def __str__(self) -> str:
        return f"{self.module}.{self.name}" if self.module else self.name


@dataclass(frozen=True)
class ImportRef:
    name: str
    span: SourceSpan = field(compare=False, default_factory=synthetic_span)


@dataclass(frozen=True)
class AttrPair:
    key: str
    value: str
    span: SourceSpan = field(compare=False, default_factory=synthetic_span)


@dataclass(frozen=True)
class TermDef:
    name: str
    enriches: QualifiedRef | None
    scope: str | None = None  # "particulars" | "universals"
    attributes: tuple[AttrPair, ...] = ()
    span: SourceSpan = field(compare=False, default_factory=synthetic_span)

    def attribute_map(self) -> dict[str, str]:
        return {a.key: a.value for a in self.attributes}


@dataclass(frozen=True)
class RelationDecl:
    name: str
    from_ref: QualifiedRef
    to_ref: QualifiedRef
    kind_ref: QualifiedRef
    span: SourceSpan = field(compare=False, default_factory=synthetic_span)


@dataclass(frozen=True)
class OntologyModule:
    name: str
    level: Level
    imports: tuple[ImportRef, ...] = ()
    body: tuple[TermDef | RelationDecl, ...] = ()
    span: SourceSpan = field(compare=False, default_factory=synthetic_span)

    @property
    def terms(self) -> tuple[TermDef, ...]:
        return tuple(d for d in self.body if isinstance(d, TermDef))

    @property
    def relations(self) -> tuple[RelationDecl, ...]:
        return tuple(d for d in self.body if isinstance(d, RelationDecl))


@dataclass(frozen=True)
class WorldRef:
    """A fact argument: bare `thing` or dotted `thing.part` / `Module.Term`,
    disambiguated by the predicate position during resolution."""

    primary: str
    part: str | None = None
    span: SourceSpan = field(compare=False, default_factory=synthetic_span)

    def __str__(self) -> str:
        return f"{self.primary}.{self.part}" if self.part else self.primary

    def as_qualified(self) -> QualifiedRef:
        if self.part is None:
            return QualifiedRef(None, self.primary, self.span)
        return QualifiedRef(self.primary, self.part, self.span)


@dataclass(frozen=True)
class PartDecl:
    name: str
    span: SourceSpan = field(compare=False, default_factory=synthetic_span)


@dataclass(frozen=True)
class ThingNode:
    name: str
    instance_of: QualifiedRef | None = None
    properties: tuple[PartDecl, ...] = ()
    powers: tuple[PartDecl, ...] = ()
    span: SourceSpan = field(compare=False, default_factory=synthetic_span)


#: World fact predicates, in grammar order.
PREDICATES = ("enables", "actsUpon", "interacts", "belongsTo", "relatesWith", "isSeenAs", "defines")


@dataclass(frozen=True)
class Fact:
    predicate: str
    left: WorldRef
    right: WorldRef
    span: SourceSpan = field(compare=False, default_factory=synthetic_span)


@dataclass(frozen=True)
class World:
    name: str
    things: tuple[ThingNode, ...] = ()
    facts: tuple[Fact, ...] = ()
    span: SourceSpan = field(compare=False, default_factory=synthetic_span)

    def thing(self, name: str) -> ThingNode | None:
        for t in self.things:
            if t.name == name:
                return t
        return None

    def facts_of(self, predicate: str) -> tuple[Fact, ...]:
        return tuple(f for f in self.facts if f.predicate == predicate)


@dataclass(frozen=True)
class Individual:
    name: str
    type_ref: QualifiedRef
    span: SourceSpan = field(compare=False, default_factory=synthetic_span)


@dataclass(frozen=True)
class InstanceFile:
    """An `instances of <Module>` block: the Instance Ontological Level
    content attached to one module."""

    of_module: str
    body: tuple[Individual | World, ...] = ()
    span: SourceSpan = field(compare=False, default_factory=synthetic_span)

    @property
    def individuals(self) -> tuple[Individual, ...]:
        return tuple(d for d in self.body if isinstance(d, Individual))

    @property
    def worlds(self) -> tuple[World, ...]:
        return tuple(d for d in self.body if isinstance(d, World))


@dataclass(frozen=True)
class MergedView:
    """Union of same-level modules with qualified names preserved."""

    level: Level
    members: tuple[str, ...]
    terms: dict[str, TermDef]       # "Module.Term" -> decl
    relations: dict[str, RelationDecl]


def merged_view(modules: Iterable[OntologyModule]) -> MergedView:
    mods = list(modules)
    if not mods:
        raise ValueError("merged_view needs at least one module")
    levels = {m.level for m in mods}
    if len(levels) > 1:
        raise ValueError(f"merged_view requires a single level, got {sorted(l.name for l in levels)}")
    terms: dict[str, TermDef] = {}
    relations: dict[str, RelationDecl] = {}
    for m in mods:
        for t in m.terms:
            terms[f"{m.name}.{t.name}"] = t
        for r in m.relations:
            relations[f"{m.name}.{r.name}"] = r
    return MergedView(
        level=levels.pop(),
        members=tuple(sorted(m.name for m in mods)),
        terms=terms,
        relations=relations,
    )


# ---------------------------------------------------------------------------
# Resolution.
# ---------------------------------------------------------------------------

class ResolvedSuite:
    """All user modules plus the built-in ThingFO module, with every
    reference known to bind. Treat as immutable after `resolve`."""

    def __init__(self, modules: list[OntologyModule], instance_files: list[InstanceFile]):
        self.modules: dict[str, OntologyModule] = {m.name: m for m in modules}
        self.instance_files: tuple[InstanceFile, ...] = tuple(instance_files)
        self._terms: dict[tuple[str, str], TermDef] = {}
        self._relations: dict[tuple[str, str], RelationDecl] = {}
        for m in modules:
            for t in m.terms:
                self._terms[(m.name, t.name)] = t
            for r in m.relations:
                self._relations[(m.name, r.name)] = r
        self._roots: dict[tuple[str, str], str] = {}

    # -- structure queries --------------------------------------------------

    def level_of(self, module_name: str) -> Level:
        if module_name == BUILTIN_MODULE:
            return Level.FO
        return self.modules[module_name].level

    def has_module(self, name: str) -> bool:
        return name == BUILTIN_MODULE or name in self.modules

    def get_term(self, module_name: str, term_name: str) -> TermDef | None:
        return self._terms.get((module_name, term_name))

    def get_relation(self, module_name: str, rel_name: str) -> RelationDecl | None:
        return self._relations.get((module_name, rel_name))

    def has_term(self, module_name: str, term_name: str) -> bool:
        if module_name == BUILTIN_MODULE:
            return metamodel.is_term(term_name)
        return (module_name, term_name) in self._terms

    def all_terms(self) -> Iterator[tuple[str, TermDef]]:
        for m in self.modules.values():
            for t in m.terms:
                yield m.name, t

    def all_relations(self) -> Iterator[tuple[str, RelationDecl]]:
        for m in self.modules.values():
            for r in m.relations:
                yield m.name, r

    def all_worlds(self) -> Iterator[tuple[InstanceFile, World]]:
        for f in self.instance_files:
            for w in f.worlds:
                yield f, w

    # -- reference binding (total after a clean resolve) ---------------------

    def term_target(self, ref: QualifiedRef, context_module: str) -> tuple[str, str]:
        return (ref.module or context_module, ref.name)

    def kind_target(self, ref: QualifiedRef, context_module: str) -> tuple[str, str]:
        return (ref.module or context_module, ref.name)

    def world_term_target(self, ref: WorldRef, context_module: str) -> tuple[str, str]:
        if ref.part is None:
            return (context_module, ref.primary)
        return (ref.primary, ref.part)

    def enrichment_root(self, module_name: str, term_name: str) -> str:
        """Foundational term reached by following `enriches` links upward.

        Total on cleanly resolved suites (cycles were rejected with E105)."""
        if module_name == BUILTIN_MODULE:
            if not metamodel.is_term(term_name):
                raise KeyError(f"unknown foundational term {term_name}")
            return term_name
        key = (module_name, term_name)
        cached = self._roots.get(key)
        if cached is not None:
            return cached
        chain: list[tuple[str, str]] = []
        mod, name = module_name, term_name
        while mod != BUILTIN_MODULE:
            chain.append((mod, name))
            term = self._terms[(mod, name)]
            if term.enriches is None:
                raise KeyError(f"term {mod}.{name} has no enrichment target")
            mod, name = self.term_target(term.enriches, mod)
            if (mod, name) in chain:
                raise KeyError(f"enrichment cycle through {module_name}.{term_name}")
        for link in chain:
            self._roots[link] = name
        return name

    def try_enrichment_root(self, module_name: str, term_name: str) -> str | None:
        """Like `enrichment_root`, but None for chains broken by a missing
        enrichment link (possible only on programmatically built terms)."""
        try:
            return self.enrichment_root(module_name, term_name)
        except KeyError:
            return None

    def root_kind_of(self, module_name: str, term_name: str) -> RootKind:
        return metamodel.root_kind(self.enrichment_root(module_name, term_name))

    # -- summary --------------------------------------------------------------

    def summary(self) -> dict[str, Any]:
        per_level = {lvl.name: 0 for lvl in MODULE_LEVELS}
        per_level[Level.FO.name] = 1  # built-in ThingFO
        for m in self.modules.values():
            per_level[m.level.name] += 1
        return {
            "modules_per_level": per_level,
            "terms": sum(len(m.terms) for m in self.modules.values()),
            "relations": sum(len(m.relations) for m in self.modules.values()),
            "instance_files": len(self.instance_files),
            "individuals": sum(len(f.individuals) for f in self.instance_files),
            "worlds": sum(len(f.worlds) for f in self.instance_files),
        }


class _Resolver:
    def __init__(self, modules: list[OntologyModule], instance_files: list[InstanceFile]):
        self.input_modules = modules
        self.instance_files = instance_files
        self.diagnostics: list[Diagnostic] = []
        self.modules: dict[str, OntologyModule] = {}

    def error(self, code: str, message: str, span: SourceSpan) -> None:
        self.diagnostics.append(Diagnostic(code=code, message=message, span=span))

    # -- passes ---------------------------------------------------------------

    def register_modules(self) -> None:
        for m in self.input_modules:
            if m.name == BUILTIN_MODULE:
                self.error("E102", f"module name {BUILTIN_MODULE} is reserved for the built-in foundational ontology", m.span)
            elif m.name in self.modules:
                self.error("E102", f"duplicate module {m.name}", m.span)
            else:
                self.modules[m.name] = m

    def check_imports(self) -> None:
        for m in self.modules.values():
            for imp in m.imports:
                if imp.name == m.name:
                    self.error("E104", f"module {m.name} imports itself", imp.span)
                elif imp.name != BUILTIN_MODULE and imp.name not in self.modules:
                    # ThingFO is implicitly visible; importing it resolves but
                    # is a cross-level import, flagged by the validator.
                    self.error("E101", f"import of unknown module {imp.name}", imp.span)

    def check_import_cycles(self) -> None:
        graph = {
            name: sorted(
                {i.name for i in m.imports if i.name in self.modules and i.name != name}
            )
            for name, m in self.modules.items()
        }
        index: dict[str, int] = {}
        lowlink: dict[str, int] = {}
        on_stack: set[str] = set()
        stack: list[str] = []
        counter = [0]
        sccs: list[list[str]] = []

        def strongconnect(v: str) -> None:
            index[v] = lowlink[v] = counter[0]
            counter[0] += 1
            stack.append(v)
            on_stack.add(v)
            for w in graph[v]:
                if w not in index:
                    strongconnect(w)
                    lowlink[v] = min(lowlink[v], lowlink[w])
                elif w in on_stack:
                    lowlink[v] = min(lowlink[v], index[w])
            if lowlink[v] == index[v]:
                component = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    component.append(w)
                    if w == v:
                        break
                if len(component) > 1:
                    sccs.append(sorted(component))

        for name in sorted(graph):
            if name not in index:
                strongconnect(name)
        for component in sorted(sccs):
            head = self.modules[component[0]]
            self.error("E103", "import cycle: " + " -> ".join(component + [component[0]]), head.span)

    def check_module_bodies(self) -> None:
        for m in self.modules.values():
            names: set[str] = set()
            for decl in m.body:
                if decl.name in names:
                    self.error("E102", f"duplicate declaration {decl.name} in module {m.name}", decl.span)
                names.add(decl.name)
            for t in m.terms:
                self._check_term(m, t)
            for r in m.relations:
                self._check_relation(m, r)

    def _resolve_term_ref(self, ref: QualifiedRef, context_module: str, what: str) -> bool:
        mod = ref.module or context_module
        if mod == BUILTIN_MODULE:
            if not metamodel.is_term(ref.name):
                self.error("E101", f"{what}: no foundational term named {ref.name} in {BUILTIN_MODULE}", ref.span)
                return False
            return True
        target = self.modules.get(mod)
        if target is None:
            self.error("E101", f"{what}: unknown module {mod}", ref.span)
            return False
        if not any(t.name == ref.name for t in target.terms):
            self.error("E101", f"{what}: no term named {ref.name} in module {mod}", ref.span)
            return False
        return True

    def _check_term(self, m: OntologyModule, t: TermDef) -> None:
        if t.enriches is not None:
            self._resolve_term_ref(t.enriches, m.name, f"term {m.name}.{t.name}")
        seen_keys: set[str] = set()
        for attr in t.attributes:
            if attr.key in seen_keys:
                self.error("E102", f"duplicate attribute {attr.key} on term {m.name}.{t.name}", attr.span)
            seen_keys.add(attr.key)

    def _check_relation(self, m: OntologyModule, r: RelationDecl) -> None:
        what = f"relation {m.name}.{r.name}"
        self._resolve_term_ref(r.from_ref, m.name, what)
        self._resolve_term_ref(r.to_ref, m.name, what)
        kind = r.kind_ref
        mod = kind.module or m.name
        if mod == BUILTIN_MODULE:
            if not metamodel.is_relationship_key(kind.name):
                self.error("E101", f"{what}: no foundational relationship named {kind.name}", kind.span)
            return
        target = self.modules.get(mod)
        if target is None:
            self.error("E101", f"{what}: unknown module {mod}", kind.span)
            return
        if not any(rel.name == kind.name for rel in target.relations):
            self.error("E101", f"{what}: no relation named {kind.name} in module {mod}", kind.span)

    def check_instances(self) -> None:
        for f in self.instance_files:
            if not (f.of_module == BUILTIN_MODULE or f.of_module in self.modules):
                self.error("E101", f"instances block names unknown module {f.of_module}", f.span)
                continue
            names: set[str] = set()
            for decl in f.body:
                if decl.name in names:
                    kind = "individual" if isinstance(decl, Individual) else "world"
                    self.error("E102", f"duplicate {kind} {decl.name} in instances of {f.of_module}", decl.span)
                names.add(decl.name)
            for ind in f.individuals:
                self._resolve_term_ref(ind.type_ref, f.of_module, f"individual {ind.name}")
            for w in f.worlds:
                self._check_world(f, w)

    def _check_world(self, f: InstanceFile, w: World) -> None:
        things: dict[str, ThingNode] = {}
        for t in w.things:
            if t.name in things:
                self.error("E102", f"duplicate thing {t.name} in world {w.name}", t.span)
                continue
            things[t.name] = t
            if t.instance_of is not None:
                self._resolve_term_ref(t.instance_of, f.of_module, f"thing {t.name}")
            part_names: set[str] = set()
            for part in t.properties + t.powers:
                if part.name in part_names:
                    self.error("E102", f"duplicate part {part.name} on thing {t.name}", part.span)
                part_names.add(part.name)

        def check_thing(ref: WorldRef, what: str) -> None:
            if ref.part is not None:
                self.error("E101", f"{what}: expected a thing, got part reference {ref}", ref.span)
            elif ref.primary not in things:
                self.error("E101", f"{what}: unknown thing {ref.primary} in world {w.name}", ref.span)

        def check_part(ref: WorldRef, sort: str, what: str) -> None:
            if ref.part is None:
                self.error("E101", f"{what}: expected a {sort} reference thing.part, got {ref}", ref.span)
                return
            thing = things.get(ref.primary)
            if thing is None:
                self.error("E101", f"{what}: unknown thing {ref.primary} in world {w.name}", ref.span)
                return
            pool = thing.properties if sort == "property" else thing.powers
            if not any(p.name == ref.part for p in pool):
                self.error("E101", f"{what}: thing {ref.primary} has no {sort} named {ref.part}", ref.span)

        def check_term(ref: WorldRef, what: str) -> None:
            self._resolve_term_ref(ref.as_qualified(), f.of_module, what)

        for fact in w.facts:
            what = f"{fact.predicate} fact in world {w.name}"
            if fact.predicate == "enables":
                check_part(fact.left, "property", what)
                check_part(fact.right, "power", what)
            elif fact.predicate == "actsUpon":
                check_part(fact.left, "power", what)
                check_part(fact.right, "property", what)
            elif fact.predicate == "interacts":
                check_part(fact.left, "power", what)
                check_thing(fact.right, what)
            elif fact.predicate == "belongsTo":
                check_thing(fact.left, what)
                check_term(fact.right, what)
            elif fact.predicate == "relatesWith":
                check_thing(fact.left, what)
                check_thing(fact.right, what)
            elif fact.predicate == "isSeenAs":
                check_part(fact.left, "property", what)
                check_thing(fact.right, what)
            elif fact.predicate == "defines":
                check_thing(fact.left, what)
                check_term(fact.right, what)
            else:
                self.error("E101", f"unknown predicate {fact.predicate} in world {w.name}", fact.span)

    def check_enrichment_cycles(self) -> None:
        # Only meaningful for chains whose every link resolved; broken links
        # already produced E101 above.
        resolved = {(m.name, t.name): t for m in self.modules.values() for t in m.terms}
        reported: set[tuple[str, str]] = set()
        for m in self.modules.values():
            for t in m.terms:
                seen: list[tuple[str, str]] = []
                mod, name = m.name, t.name
                while (mod, name) in resolved:
                    if (mod, name) in seen:
                        cycle = seen[seen.index((mod, name)):]
                        if not reported.intersection(cycle):
                            reported.update(cycle)
                            pretty = " -> ".join(f"{cm}.{cn}" for cm, cn in cycle + [cycle[0]])
                            self.error("E105", f"enrichment cycle: {pretty}", resolved[cycle[0]].span)
                        break
                    seen.append((mod, name))
                    enriches = resolved[(mod, name)].enriches
                    if enriches is None:
                        break
                    mod, name = (enriches.module or mod, enriches.name)


def resolve(
    modules: Iterable[OntologyModule],
    instance_files: Iterable[InstanceFile] = (),
) -> tuple[ResolvedSuite | None, list[Diagnostic]]:
    """Bind all names in the suite.

    Returns `(suite, [])` on success, `(None, diagnostics)` otherwise;
    resolution never partially succeeds silently.
    """
    r = _Resolver(list(modules), list(instance_files))
    r.register_modules()
    r.check_imports()
    r.check_import_cycles()
    r.check_module_bodies()
    r.check_instances()
    r.check_enrichment_cycles()
    if r.diagnostics:
        return None, r.diagnostics
    suite = ResolvedSuite(list(r.modules.values()), list(r.instance_files))
    return suite, []
