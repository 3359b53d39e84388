"""
Modelos Pydantic para el reporte de verificación.
"""

from pydantic import BaseModel, Field, model_validator


# ============================================================================
# RESUMEN POR VERIFICACIÓN
# ============================================================================

class CheckSummary(BaseModel):
    """
    Resultado agregado de una verificación sobre todas las instancias.

    Attributes:
        checked: Instancias sobre las que se evaluó
        passed: Instancias que cumplieron la tolerancia
        max_residual: Mayor residuo observado
        tolerance: Tolerancia aplicada
    """

    checked: int = Field(default=0, ge=0)
    passed: int = Field(default=0, ge=0)
    max_residual: float = Field(default=0.0, ge=0)
    tolerance: float = Field(..., gt=0)

    @model_validator(mode="after")
    def validate_counts(self) -> "CheckSummary":
        if self.passed > self.checked:
            raise ValueError("passed no puede superar checked")
        return self

    @property
    def ok(self) -> bool:
        return self.passed == self.checked

    def record(self, residual: float) -> bool:
        """Acumula un residuo y devuelve si pasó."""
        residual = abs(float(residual))
        self.checked += 1
        self.max_residual = max(self.max_residual, residual)
        passed = residual <= self.tolerance
        if passed:
            self.passed += 1
        return passed

    def record_flag(self, passed: bool, residual: float = 0.0) -> bool:
        """Acumula un resultado booleano (con residuo informativo)."""
        self.checked += 1
        self.max_residual = max(self.max_residual, abs(float(residual)))
        if passed:
            self.passed += 1
        return passed


# ============================================================================
# REPORTE DE VERIFICACIÓN
# ============================================================================

class VerificationReport(BaseModel):
    """
    Reporte determinista del conjunto de invariantes.

    No contiene marcas de tiempo: misma semilla ⇒ mismos bytes.
    """

    instance_count: int = Field(..., ge=0)
    dimension: int = Field(..., ge=2)
    seed: int
    checks: dict[str, CheckSummary] = Field(default_factory=dict)
    vertex_rule_fired: int = Field(default=0, ge=0)
    min_hessian_eigenvalue: float = 0.0

    @property
    def passed(self) -> bool:
        return all(check.ok for check in self.checks.values())

    def failed_checks(self) -> list[str]:
        return [name for name, check in self.checks.items() if not check.ok]


# ============================================================================
# RESUMEN DE LOTE
# ============================================================================

class BatchSummary(BaseModel):
    """
    Conteos de un lote procesado registro a registro.

    Attributes:
        processed: Registros que produjeron salida
        failed: Identificadores (o líneas) de los registros rechazados
    """

    processed: int = Field(default=0, ge=0)
    failed: list[str] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failed
