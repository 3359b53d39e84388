"""
Escritor de escenas SVG para las construcciones de Torricelli y Napoleon.

Se construye una escena, se le agregan figuras en coordenadas del plano y se
escribe a un archivo SVG 1.1. El eje y se invierte para que la orientación
positiva se vea antihoraria en pantalla.
"""

import logging
from pathlib import Path
from typing import Iterable, Sequence
from xml.sax.saxutils import escape

import numpy as np

from napoleon.config import get_settings
from napoleon.exceptions import NapoleonError, StorageError, TrivialTriple
from napoleon.geometry.fermat import fermat_point
from napoleon.geometry.frames import project_to_plane
from napoleon.geometry.predicates import DEFAULT_TOL
from napoleon.geometry.transforms import centroid, double_outer_napoleon, napoleon, torricelli
from napoleon.models.geometry import TransformKind, Triple
from napoleon.models.records import TripleRecord

logger = logging.getLogger(__name__)

SHOW_CHOICES = ("torricelli+", "torricelli-", "napoleon+", "napoleon-", "double", "fermat")

# Alias aceptados en --show
SHOW_ALIASES = {
    "torricelli": ("torricelli+", "torricelli-"),
    "torricelli±": ("torricelli+", "torricelli-"),
    "napoleon": ("napoleon+", "napoleon-"),
    "napoleon±": ("napoleon+", "napoleon-"),
}

STYLES = {
    "original": {"stroke": "#000000", "stroke-width": 2.0},
    "torricelli+": {"stroke": "#1f77b4", "stroke-width": 1.0, "stroke-dasharray": "6,3"},
    "torricelli-": {"stroke": "#ff7f0e", "stroke-width": 1.0, "stroke-dasharray": "6,3"},
    "napoleon+": {"stroke": "#2ca02c", "stroke-width": 1.5},
    "napoleon-": {"stroke": "#d62728", "stroke-width": 1.5},
    "double": {"stroke": "#9467bd", "stroke-width": 1.5, "stroke-dasharray": "2,2"},
    "fermat": {"stroke": "#8c564b", "stroke-width": 1.0},
}

MARKER_RADIUS = 4.0


def parse_show(value: str | Iterable[str]) -> list[str]:
    """
    Normaliza la lista de construcciones a dibujar.

    Acepta una cadena separada por comas o un iterable; expande los alias
    ("napoleon±" → napoleon+, napoleon-) y conserva el orden de SHOW_CHOICES.

    Raises:
        ValueError: Si aparece un nombre desconocido
    """
    tokens = value.split(",") if isinstance(value, str) else list(value)
    selected: set[str] = set()
    for token in (t.strip() for t in tokens):
        if not token:
            continue
        if token in SHOW_ALIASES:
            selected.update(SHOW_ALIASES[token])
        elif token in SHOW_CHOICES:
            selected.add(token)
        else:
            raise ValueError(f"Construcción desconocida: {token!r} (opciones: {', '.join(SHOW_CHOICES)})")
    return [name for name in SHOW_CHOICES if name in selected]


def _style_attributes(style: dict, fill: str = "none") -> str:
    parts = [f'fill="{fill}"'] + [f'{key}="{value}"' for key, value in style.items()]
    return " ".join(parts)


# ============================================================================
# FIGURAS
# ============================================================================

class Polygon:
    """Triángulo cerrado (o cualquier polígono) en coordenadas del plano."""

    def __init__(self, points: np.ndarray, name: str):
        self.points = np.asarray(points, dtype=float).reshape(-1, 2)
        self.name = name

    def to_svg(self, to_pixels) -> str:
        coords = " ".join(f"{px:.3f},{py:.3f}" for px, py in to_pixels(self.points))
        return f'<polygon class="{self.name}" points="{coords}" {_style_attributes(STYLES[self.name])}/>'


class LoopPath:
    """Varios subtrayectos cerrados en un único elemento (configuración de Torricelli)."""

    def __init__(self, loops: Sequence[np.ndarray], name: str):
        self.loops = [np.asarray(loop, dtype=float).reshape(-1, 2) for loop in loops]
        self.points = np.vstack(self.loops)
        self.name = name

    def to_svg(self, to_pixels) -> str:
        commands = []
        for loop in self.loops:
            pixels = to_pixels(loop)
            head, *tail = [f"{px:.3f},{py:.3f}" for px, py in pixels]
            commands.append("M" + head + "".join(" L" + p for p in tail) + " Z")
        return f'<path class="{self.name}" d="{" ".join(commands)}" {_style_attributes(STYLES[self.name])}/>'


class Marker:
    """Punto destacado (centroide o punto de Fermat)."""

    def __init__(self, point: np.ndarray, name: str, color: str):
        self.points = np.asarray(point, dtype=float).reshape(1, 2)
        self.name = name
        self.color = color

    def to_svg(self, to_pixels) -> str:
        (px, py), = to_pixels(self.points)
        return (f'<circle class="{self.name}" cx="{px:.3f}" cy="{py:.3f}" '
                f'r="{MARKER_RADIUS}" fill="{self.color}" stroke="none"/>')


class Label:
    """Texto junto a un vértice."""

    def __init__(self, point: np.ndarray, text: str):
        self.points = np.asarray(point, dtype=float).reshape(1, 2)
        self.text = text

    def to_svg(self, to_pixels) -> str:
        (px, py), = to_pixels(self.points)
        return (f'<text x="{px + 5:.3f}" y="{py - 5:.3f}" font-family="sans-serif" '
                f'font-size="12">{escape(self.text)}</text>')


# ============================================================================
# ESCENA
# ============================================================================

class Scene:
    """
    Escena SVG: lista de grupos de figuras con un viewBox ajustado.

    Attributes:
        width: Ancho en píxeles
        margin: Fracción de margen alrededor de la geometría
        groups: Pares (id del grupo, figuras)
    """

    def __init__(self, width: int = 800, margin: float = 0.05):
        self.width = width
        self.margin = margin
        self.groups: list[tuple[str, list]] = []

    def add_group(self, group_id: str, items: list) -> None:
        self.groups.append((group_id, items))

    def bounds(self) -> tuple[float, float, float, float] | None:
        """(xmin, ymin, xmax, ymax) de toda la geometría, o None si está vacía."""
        points = [item.points for _, items in self.groups for item in items]
        if not points:
            return None
        stacked = np.vstack(points)
        (xmin, ymin), (xmax, ymax) = stacked.min(axis=0), stacked.max(axis=0)
        return float(xmin), float(ymin), float(xmax), float(ymax)

    def _viewport(self):
        bounds = self.bounds() or (0.0, 0.0, 1.0, 1.0)
        xmin, ymin, xmax, ymax = bounds
        extent = max(xmax - xmin, ymax - ymin) or 1.0
        pad_x = self.margin * ((xmax - xmin) or extent)
        pad_y = self.margin * ((ymax - ymin) or extent)
        left, right = xmin - pad_x, xmax + pad_x
        bottom, top = ymin - pad_y, ymax + pad_y
        scale = self.width / (right - left)
        height = (top - bottom) * scale

        def to_pixels(points: np.ndarray) -> np.ndarray:
            # y invertido: el norte del plano queda arriba en pantalla
            return np.column_stack([(points[:, 0] - left) * scale, (top - points[:, 1]) * scale])

        return height, to_pixels

    def to_string(self) -> str:
        height, to_pixels = self._viewport()
        lines = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{self.width}" '
            f'height="{height:.3f}" viewBox="0 0 {self.width} {height:.3f}">',
        ]
        for group_id, items in self.groups:
            safe_id = escape(group_id, {'"': "&quot;"})
            lines.append(f'  <g id="{safe_id}">')
            lines.extend(f"    {item.to_svg(to_pixels)}" for item in items)
            lines.append("  </g>")
        lines.append("</svg>")
        return "\n".join(lines) + "\n"

    def write(self, path: Path | str) -> None:
        """
        Escribe la escena.

        Raises:
            StorageError: Si no se puede escribir
        """
        path = Path(path)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(self.to_string(), encoding="utf-8")
        except OSError as e:
            logger.error(f"Error escribiendo SVG {path}: {e}")
            raise StorageError(f"No se puede escribir {path}: {e}") from e


# ============================================================================
# CONSTRUCCIONES
# ============================================================================

def record_items(x: Triple, show: Sequence[str], tol: float = DEFAULT_TOL) -> list:
    """
    Figuras de un triple en coordenadas planas.

    En d = 2 se usan las coordenadas originales; en d > 2 todo se proyecta
    ortogonalmente sobre el marco del plano del triple.

    Raises:
        TrivialTriple: Si el triple no tiene plano
    """
    if x.scale == 0.0:
        raise TrivialTriple("Triple trivial: no hay triángulo que dibujar")

    if x.dimension == 2:
        def flatten(points: np.ndarray) -> np.ndarray:
            return np.atleast_2d(points)
    else:
        projection = project_to_plane(x, tol)

        def flatten(points: np.ndarray) -> np.ndarray:
            return projection.frame.coordinates(np.atleast_2d(points) - projection.center)

    original = flatten(x.vertices)
    items: list = [Polygon(original, "original")]
    for name in show:
        if name.startswith("torricelli"):
            kind = TransformKind.INNER if name.endswith("+") else TransformKind.OUTER
            apexes = flatten(torricelli(x, kind, tol).vertices)
            # el vértice i se levanta sobre el lado opuesto (x_{i+1}, x_{i+2})
            loops = [np.array([original[(i + 1) % 3], apexes[i], original[(i + 2) % 3]]) for i in range(3)]
            items.append(LoopPath(loops, name))
        elif name.startswith("napoleon"):
            kind = TransformKind.INNER if name.endswith("+") else TransformKind.OUTER
            items.append(Polygon(flatten(napoleon(x, kind, tol).vertices), name))
        elif name == "double":
            items.append(Polygon(flatten(double_outer_napoleon(x, tol).vertices), name))
        elif name == "fermat":
            items.append(Marker(flatten(fermat_point(x, tol)), "fermat", STYLES["fermat"]["stroke"]))

    items.append(Marker(flatten(centroid(x)), "centroid", "#000000"))
    items.extend(Label(point, f"x{i + 1}") for i, point in enumerate(original))
    return items


def render_records(
    records: Sequence[TripleRecord],
    show: Sequence[str],
    tol: float = DEFAULT_TOL,
    width: int | None = None,
    margin: float | None = None,
) -> tuple[Scene, list[str]]:
    """
    Construye la escena de todos los registros.

    Returns:
        tuple: (escena, ids omitidos por ser triviales o inválidos)
    """
    settings = get_settings()
    scene = Scene(width or settings.SVG_WIDTH, settings.SVG_MARGIN if margin is None else margin)
    skipped: list[str] = []
    for record in records:
        try:
            scene.add_group(record.id, record_items(record.to_triple(), show, tol))
        except NapoleonError as e:
            logger.warning(f"⚠️ Registro {record.id!r} omitido del dibujo: {e}")
            skipped.append(record.id)
    logger.info(f"🎨 Escena con {len(scene.groups)} triples ({len(skipped)} omitidos)")
    return scene, skipped
