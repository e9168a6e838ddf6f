"""ontoarch: definition language and conformance validator for layered
ontology suites grounded in the ThingFO v1.3 foundational ontology."""

from .metamodel import (
    BUILTIN_MODULE,
    THINGFO_VERSION,
    RootKind,
    all_property_specs,
    all_relationship_specs,
    all_term_specs,
    is_descendant,
    root_kind,
)
from .model import (
    Fact,
    Individual,
    InstanceFile,
    Level,
    OntologyModule,
    QualifiedRef,
    RelationDecl,
    ResolvedSuite,
    TermDef,
    ThingNode,
    World,
    WorldRef,
    merged_view,
    resolve,
)
from .parser import SuiteAst, parse_suite, render_canonical, tokenize
from .reporting import Diagnostic, Report, exit_code, render_json, render_text
from .validator import (
    RuleId,
    Violation,
    check_architecture,
    check_axioms,
    check_property_conformance,
    check_relationship_conformance,
    check_rule1,
    check_rule2,
    check_rule3,
    oracle_check_axioms,
    validate_suite,
)
from .cli import build_report, explain, export_graph, run

__version__ = "0.1.0"

__all__ = [
    "BUILTIN_MODULE",
    "THINGFO_VERSION",
    "RootKind",
    "all_property_specs",
    "all_relationship_specs",
    "all_term_specs",
    "is_descendant",
    "root_kind",
    "Fact",
    "Individual",
    "InstanceFile",
    "Level",
    "OntologyModule",
    "QualifiedRef",
    "RelationDecl",
    "ResolvedSuite",
    "TermDef",
    "ThingNode",
    "World",
    "WorldRef",
    "merged_view",
    "resolve",
    "SuiteAst",
    "parse_suite",
    "render_canonical",
    "tokenize",
    "Diagnostic",
    "Report",
    "exit_code",
    "render_json",
    "render_text",
    "RuleId",
    "Violation",
    "check_architecture",
    "check_axioms",
    "check_property_conformance",
    "check_relationship_conformance",
    "check_rule1",
    "check_rule2",
    "check_rule3",
    "oracle_check_axioms",
    "validate_suite",
    "build_report",
    "explain",
    "export_graph",
    "run",
    "__version__",
]
