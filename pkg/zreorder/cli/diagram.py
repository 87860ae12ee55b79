from pathlib import Path
from typing import Optional, Tuple

import networkx as nx

from zreorder.core.files import spec_file_manager
from zreorder.core.logging import cli_logger as logger
from zreorder.models.coloring import Color
from zreorder.schemas.presentation import ValidatedBijection
from zreorder.services.coloring import Coloring, ColoringService
from zreorder.services.orbit import OrbitService
from zreorder.services.presentation import PresentationService

COLOR_FILLS = {Color.A: "lightblue", Color.B: "salmon"}
PERIODIC_FILL = "lightgrey"


def _coloring(f: ValidatedBijection) -> Optional[Coloring]:
    if f.is_analyzable and OrbitService.is_periodic_point_free(f):
        return ColoringService.coloring_for(f)
    return None


def build_orbit_graph(f: ValidatedBijection, window: Tuple[int, int]) -> nx.DiGraph:
    """Graphe x -> f(x) restreint à la fenêtre, coloré par la 2-coloration si elle existe."""
    lo, hi = window
    coloring = _coloring(f)
    graph = nx.DiGraph(name="orbits")
    for x in range(lo, hi + 1):
        attrs = {"label": str(x)}
        if coloring is not None:
            attrs.update(style="filled", fillcolor=COLOR_FILLS[coloring.membership(x)])
        elif f.is_analyzable and OrbitService.orbit_of(f, x).is_periodic:
            attrs.update(style="filled", fillcolor=PERIODIC_FILL)
        graph.add_node(str(x), **attrs)
    for x in range(lo, hi + 1):
        y = PresentationService.eval(f, x)
        if lo <= y <= hi:
            graph.add_edge(str(x), str(y))
    return graph


def emit_orbit_diagram(f: ValidatedBijection, window: Tuple[int, int], path: Path) -> Path:
    """
    Écrit le diagramme d'orbites au format DOT.

    Raises:
        SpecFileException: Si le fichier ne peut pas être écrit
    """
    graph = build_orbit_graph(f, window)
    dot = nx.nx_pydot.to_pydot(graph).to_string()
    logger.info(f"Diagramme : {graph.number_of_nodes()} nœuds, {graph.number_of_edges()} arêtes")
    return spec_file_manager.write_text(path, dot)
