"""
Servicio de verificación de invariantes.
Genera triples aleatorios reproducibles y ejecuta el conjunto completo de
propiedades de las transformaciones y de la alineación óptima.
"""

import logging
from pathlib import Path

import numpy as np

from napoleon.alignment.closed_form import optimal_equilateral_alignment
from napoleon.alignment.kkt import kkt_residual
from napoleon.alignment.oracle import oracle_alignment
from napoleon.alignment.planar import hessian_min_eigenvalue
from napoleon.alignment.weiszfeld import weiszfeld
from napoleon.config import Settings, get_settings
from napoleon.exceptions import NapoleonError, StorageError
from napoleon.geometry.fermat import locate_fermat_point
from napoleon.geometry.frames import plane_frame, rotation_operator
from napoleon.geometry.predicates import equilaterality_residual, is_collinear
from napoleon.geometry.transforms import (
    centroid,
    double_outer_napoleon,
    napoleon,
    napoleon_iter,
    torricelli,
)
from napoleon.models.geometry import FermatRule, TransformKind, Triple
from napoleon.models.report import CheckSummary, VerificationReport
from napoleon.utils.sampling import edge_cases, random_equilateral, random_rotation, random_triple

logger = logging.getLogger(__name__)

MAX_ITERATION_ORDER = 6
EQUIVARIANCE_TOL = 1e-9
BRANCH_EQUALITY_TOL = 1e-9
ORACLE_LOWER_TOL = 1e-9
ROTATION_SQUARE_TOL = 1e-12
HESSIAN_TOL = 1e-12


def _max_norm(a: np.ndarray, b: np.ndarray) -> float:
    """Mayor distancia entre filas homólogas."""
    return float(np.max(np.linalg.norm(np.atleast_2d(a) - np.atleast_2d(b), axis=-1)))


class VerificationService:
    """
    Servicio que ejecuta el conjunto de invariantes sobre triples aleatorios.

    Cada instancia aporta a lo sumo un resultado por verificación, así que
    los conteos nunca superan instance_count.

    Attributes:
        n: Triples aleatorios (normales estándar) a generar
        dimension: Dimensión d
        seed: Semilla del generador
        settings: Tolerancias y parámetros de los oráculos
    """

    def __init__(self, n: int, dimension: int, seed: int, settings: Settings | None = None):
        """Inicializa el servicio validando n ≥ 1 y d ≥ 2."""
        if n < 1:
            raise ValueError(f"n debe ser ≥ 1, recibido {n}")
        if dimension < 2:
            raise ValueError(f"d debe ser ≥ 2, recibido {dimension}")
        self.n = n
        self.dimension = dimension
        self.seed = seed
        self.settings = settings or get_settings()
        self.tol = self.settings.COLLINEAR_TOL
        logger.info(f"VerificationService inicializado: n={n}, d={dimension}, seed={seed}")

    # ========================================================================
    # MÉTODOS PÚBLICOS
    # ========================================================================

    def generate(self) -> tuple[list[tuple[str, Triple]], list[Triple], np.random.Generator]:
        """
        Triples de la corrida: n normales + casos borde, y un equilátero por instancia.

        Returns:
            tuple: (instancias etiquetadas, equiláteros, generador para el resto)
        """
        rng = np.random.default_rng(self.seed)
        instances = [("random", random_triple(rng, self.dimension)) for _ in range(self.n)]
        instances.extend(edge_cases(rng, self.dimension))
        equilaterals = [random_equilateral(rng, self.dimension) for _ in instances]
        return instances, equilaterals, rng

    def run(self) -> VerificationReport:
        """
        Ejecuta todas las verificaciones.

        Returns:
            VerificationReport: Conteos y residuos máximos por verificación
        """
        s = self.settings
        instances, equilaterals, rng = self.generate()
        checks = {
            "centroid_preservation": CheckSummary(tolerance=s.IDENTITY_TOL),
            "equal_displacement": CheckSummary(tolerance=s.IDENTITY_TOL),
            "napoleon_equilateral": CheckSummary(tolerance=s.EQUILATERAL_TOL),
            "equilateral_collapse_reflection": CheckSummary(tolerance=s.IDENTITY_TOL),
            "iteration_shortcuts": CheckSummary(tolerance=s.IDENTITY_TOL),
            "double_outer_formula": CheckSummary(tolerance=s.IDENTITY_TOL),
            "oracle_gap": CheckSummary(tolerance=s.ORACLE_GAP_TOL),
            "oracle_argmin": CheckSummary(tolerance=s.ORACLE_ARGMIN_TOL),
            "kkt_residual": CheckSummary(tolerance=s.KKT_TOL),
            "branch_ordering": CheckSummary(tolerance=BRANCH_EQUALITY_TOL),
            "fermat_weiszfeld": CheckSummary(tolerance=s.FERMAT_MATCH_TOL),
            "rotation_square": CheckSummary(tolerance=ROTATION_SQUARE_TOL),
            "strong_convexity": CheckSummary(tolerance=HESSIAN_TOL),
        }
        if self.dimension == 2:
            checks["rigid_equivariance"] = CheckSummary(tolerance=EQUIVARIANCE_TOL)
        else:
            checks["plane_containment"] = CheckSummary(tolerance=s.IDENTITY_TOL)

        vertex_rule_fired = 0
        for index, ((label, x), equilateral) in enumerate(zip(instances, equilaterals)):
            try:
                self._check_transforms(x, checks)
                self._check_equilateral(equilateral, checks)
                self._check_iterations(x, checks)
                self._check_alignment(x, checks)
                vertex_rule_fired += self._check_fermat(x, checks)
                if self.dimension == 2:
                    self._check_equivariance(x, rng, checks)
            except NapoleonError as e:
                logger.error(f"❌ Instancia {index} ({label}): {e}")
                raise

        min_eigenvalue = min(hessian_min_eigenvalue(1), hessian_min_eigenvalue(-1))
        checks["strong_convexity"].record(max(0.0, 1.0 - min_eigenvalue))

        report = VerificationReport(
            instance_count=len(instances),
            dimension=self.dimension,
            seed=self.seed,
            checks=checks,
            vertex_rule_fired=vertex_rule_fired,
            min_hessian_eigenvalue=min_eigenvalue,
        )
        if report.passed:
            logger.info(f"✅ Verificación completa: {report.instance_count} instancias")
        else:
            logger.warning(f"⚠️ Verificaciones fallidas: {report.failed_checks()}")
        return report

    def write_report(self, report: VerificationReport, path: Path | str) -> None:
        """
        Escribe el reporte como JSON con sangría (bytes deterministas).

        Raises:
            StorageError: Si no se puede escribir
        """
        path = Path(path)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(report.model_dump_json(indent=2) + "\n", encoding="utf-8")
        except OSError as e:
            logger.error(f"Error escribiendo reporte {path}: {e}")
            raise StorageError(f"No se puede escribir {path}: {e}") from e
        logger.info(f"Reporte escrito en {path}")

    # ========================================================================
    # VERIFICACIONES POR INSTANCIA
    # ========================================================================

    @staticmethod
    def _denominator(x: Triple) -> float:
        scale = x.scale
        return scale if scale > 0.0 else 1.0

    def _check_transforms(self, x: Triple, checks: dict[str, CheckSummary]) -> None:
        """Centroides, desplazamientos iguales, teorema de Napoleon y R_x²."""
        denom = self._denominator(x)
        c = centroid(x)
        centroid_gap = 0.0
        displacement_gap = 0.0
        equilateral_gap = 0.0
        for kind in TransformKind:
            t = torricelli(x, kind, self.tol)
            z = napoleon(x, kind, self.tol)
            centroid_gap = max(centroid_gap, _max_norm(centroid(t), c), _max_norm(centroid(z), c))
            displacements = np.linalg.norm(t.vertices - x.vertices, axis=1)
            spread = displacements.max() - displacements.min()
            displacement_gap = max(displacement_gap, spread / max(displacements.max(), denom))
            equilateral_gap = max(equilateral_gap, equilaterality_residual(z, reference_scale=x.scale))

        checks["centroid_preservation"].record(centroid_gap / denom)
        checks["equal_displacement"].record(displacement_gap)
        checks["napoleon_equilateral"].record(equilateral_gap)

        R = rotation_operator(x, self.tol).matrix
        if x.scale == 0.0:
            projector = np.zeros_like(R)
        else:
            basis = plane_frame(x, self.tol).basis
            projector = basis @ basis.T
        checks["rotation_square"].record(float(np.max(np.abs(R @ R + projector))))

    def _check_equilateral(self, e: Triple, checks: dict[str, CheckSummary]) -> None:
        """N+(e) colapsa al centroide y N−(e) refleja respecto de él."""
        c = centroid(e)
        collapse = _max_norm(napoleon(e, TransformKind.INNER, self.tol).vertices, c)
        reflection = _max_norm(napoleon(e, TransformKind.OUTER, self.tol).vertices, 2.0 * c - e.vertices)
        checks["equilateral_collapse_reflection"].record(max(collapse, reflection) / self._denominator(e))

    def _check_iterations(self, x: Triple, checks: dict[str, CheckSummary]) -> None:
        """Atajos de napoleon_iter contra composición literal para k ≤ 6, y N−² cerrado."""
        denom = self._denominator(x)
        worst = 0.0
        literal_outer_square = None
        for kind in TransformKind:
            literal = x
            for k in range(MAX_ITERATION_ORDER + 1):
                if k > 0:
                    literal = napoleon(literal, kind, self.tol)
                fast = napoleon_iter(x, kind, k, self.tol)
                worst = max(worst, _max_norm(fast.vertices, literal.vertices) / denom)
                if kind is TransformKind.OUTER and k == 2:
                    literal_outer_square = literal
        checks["iteration_shortcuts"].record(worst)

        closed = double_outer_napoleon(x, self.tol)
        checks["double_outer_formula"].record(
            _max_norm(closed.vertices, literal_outer_square.vertices) / denom
        )

    def _check_alignment(self, x: Triple, checks: dict[str, CheckSummary]) -> None:
        """Oráculo, certificado KKT, orden de ramas y contención en el plano."""
        s = self.settings
        denom = self._denominator(x)
        result = optimal_equilateral_alignment(x, self.tol)
        collinear = is_collinear(x, self.tol)

        diagnostics = kkt_residual(x, result.y, s.KKT_EQUILATERAL_TOL)
        checks["kkt_residual"].record(diagnostics.gradient_residual)

        branch_gap = (result.branch_objectives[-1] - result.branch_objectives[1]) / denom ** 2
        if collinear:
            checks["branch_ordering"].record_flag(
                abs(branch_gap) <= BRANCH_EQUALITY_TOL and not result.unique, abs(branch_gap)
            )
        else:
            checks["branch_ordering"].record_flag(branch_gap > 0.0 and result.unique, abs(branch_gap))

        if not collinear:
            oracle = oracle_alignment(x, s.ORACLE_GRID_N, s.ORACLE_REFINE_ITERS, tol=self.tol)
            gap = (oracle.objective - result.objective) / denom ** 2
            checks["oracle_gap"].record_flag(-ORACLE_LOWER_TOL <= gap <= s.ORACLE_GAP_TOL, abs(gap))
            checks["oracle_argmin"].record(_max_norm(oracle.y.vertices, result.y.vertices) / denom)

        if "plane_containment" in checks and x.scale > 0.0:
            basis = plane_frame(x, self.tol).basis
            offsets = result.y.vertices - centroid(x)
            off_plane = offsets - offsets @ basis @ basis.T
            checks["plane_containment"].record(float(np.max(np.linalg.norm(off_plane, axis=1))) / denom)

    def _check_fermat(self, x: Triple, checks: dict[str, CheckSummary]) -> int:
        """
        Punto de Fermat contra Weiszfeld; devuelve 1 si disparó la regla del vértice.

        Si alguno de los dos métodos falla (p. ej. NoConvergence) la instancia
        cuenta como fallida en fermat_weiszfeld y la corrida continúa.
        """
        if x.scale == 0.0:
            return 0
        s = self.settings
        located = None
        try:
            located = locate_fermat_point(x, self.tol, s.ANGLE_TOL)
            oracle = weiszfeld(x, s.WEISZFELD_TOL, s.WEISZFELD_MAX_ITERS)
        except NapoleonError as e:
            logger.warning(f"⚠️ Punto de Fermat sin verificar: {e}")
            checks["fermat_weiszfeld"].record_flag(False, getattr(e, "last_step", 0.0) / x.scale)
        else:
            checks["fermat_weiszfeld"].record(_max_norm(located.point, oracle) / x.scale)
        return int(located is not None and located.rule is FermatRule.VERTEX)

    def _check_equivariance(self, x: Triple, rng: np.random.Generator, checks: dict[str, CheckSummary]) -> None:
        """N±(Qx + v) = Q·N±(x) + v para rotaciones propias del plano."""
        Q = random_rotation(rng, 2)
        v = rng.standard_normal(2)
        moved = Triple.from_array(x.vertices @ Q.T + v)
        worst = 0.0
        for kind in TransformKind:
            expected = napoleon(x, kind, self.tol).vertices @ Q.T + v
            worst = max(worst, _max_norm(napoleon(moved, kind, self.tol).vertices, expected))
        checks["rigid_equivariance"].record(worst / self._denominator(x))
