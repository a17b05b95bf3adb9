"""Bound quiver algebras, Brauer graphs and support tau-tilting enumeration."""
from .presentation import (AlgebraPresentation, Arrow, NonAdmissibleError, ParseError, Path, Quiver,
                           RelationSet, ValidationError, make_presentation, parse_presentation)
from .gentle import GentleReport, check_gentle, is_gentle, maximal_paths, quiver_shape
from .brauer import (BrauerGraph, SelfFoldedError, algebra_of_brauer_graph, classify_graph, gamma_of_gentle,
                     looks_like_brauer_graph, parse_brauer_graph, predicted_count)
from .repmod import (ModuleMap, RepModule, fac_contains, hom_dim, minimal_projective_presentation,
                     projective_at, syzygy, tau)
from .stt import SttConfig, enumerate_stt_pairs, hasse_quiver, support_tau_tilting

__version__ = "0.1.0"


def load_fixture(name: str) -> AlgebraPresentation | BrauerGraph:
    """Load a bundled example by stem, e.g. ``"F4"`` or ``"cycle4"``."""
    from importlib.resources import files

    text = files(__package__).joinpath("fixtures", f"{name}.txt").read_text(encoding="utf-8")
    if looks_like_brauer_graph(text):
        return parse_brauer_graph(text)
    return parse_presentation(text, name=name)


__all__ = [
    "AlgebraPresentation", "Arrow", "NonAdmissibleError", "ParseError", "Path", "Quiver", "RelationSet",
    "ValidationError", "make_presentation", "parse_presentation",
    "GentleReport", "check_gentle", "is_gentle", "maximal_paths", "quiver_shape",
    "BrauerGraph", "SelfFoldedError", "algebra_of_brauer_graph", "classify_graph", "gamma_of_gentle",
    "looks_like_brauer_graph", "parse_brauer_graph", "predicted_count",
    "ModuleMap", "RepModule", "fac_contains", "hom_dim", "minimal_projective_presentation", "projective_at",
    "syzygy", "tau",
    "SttConfig", "enumerate_stt_pairs", "hasse_quiver", "support_tau_tilting",
    "load_fixture",
]
