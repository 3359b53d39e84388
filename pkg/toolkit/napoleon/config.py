"""
Configuración de Napoleon Toolkit.
Maneja variables de entorno, tolerancias numéricas y paths a archivos de datos.
"""

from pathlib import Path
from functools import lru_cache
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Configuración de la aplicación usando Pydantic Settings.
    Lee variables de entorno (prefijo NAPOLEON_) desde archivo .env
    """

    # ============================================================================
    # CONFIGURACIÓN GENERAL
    # ============================================================================

    APP_NAME: str = "Napoleon Toolkit"
    DEBUG: bool = False
    LOG_LEVEL: str = "WARNING"

    # ============================================================================
    # CONFIGURACIÓN DE ALMACENAMIENTO
    # ============================================================================

    DATA_DIR: str = "data"        # Directorio base para archivos .jsonl
    REPORTS_DIR: str = "reports"  # Reportes de verificación

    # ============================================================================
    # TOLERANCIAS NUMÉRICAS
    # ============================================================================

    COLLINEAR_TOL: float = 1e-9        # relativa a la escala del triple
    IDENTITY_TOL: float = 1e-10        # identidades en forma cerrada
    EQUILATERAL_TOL: float = 1e-10     # predicado de equilateralidad
    KKT_EQUILATERAL_TOL: float = 1e-8  # precondición de kkt_residual
    KKT_TOL: float = 1e-8              # certificado de estacionariedad
    ANGLE_TOL: float = 1e-12           # prueba del coseno (120°)

    # ============================================================================
    # ORÁCULOS
    # ============================================================================

    ORACLE_GRID_N: int = 256
    ORACLE_REFINE_ITERS: int = 80
    ORACLE_GAP_TOL: float = 1e-6
    ORACLE_ARGMIN_TOL: float = 1e-4
    WEISZFELD_TOL: float = 1e-13
    WEISZFELD_MAX_ITERS: int = 200_000
    FERMAT_MATCH_TOL: float = 1e-8

    # ============================================================================
    # VERIFICACIÓN Y RENDERIZADO
    # ============================================================================

    VERIFY_N: int = 1000
    VERIFY_DIM: int = 2
    VERIFY_SEED: int = 7

    SVG_WIDTH: int = 800
    SVG_MARGIN: float = 0.05  # 5% alrededor de la geometría dibujada

    # ============================================================================
    # CONFIGURACIÓN DE PYDANTIC
    # ============================================================================

    model_config = SettingsConfigDict(
        env_prefix="NAPOLEON_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="ignore"  # Ignorar variables de entorno no definidas
    )

    # ============================================================================
    # PROPIEDADES COMPUTADAS - PATHS
    # ============================================================================

    @property
    def data_directory(self) -> Path:
        """
        Retorna el Path del directorio de datos.
        Crea el directorio si no existe.
        """
        data_path = Path(self.DATA_DIR)
        data_path.mkdir(parents=True, exist_ok=True)
        return data_path

    @property
    def reports_directory(self) -> Path:
        """Path al directorio de reportes de verificación (se crea si falta)."""
        reports_path = Path(self.REPORTS_DIR)
        reports_path.mkdir(parents=True, exist_ok=True)
        return reports_path

    @property
    def SAMPLE_TRIPLES_FILE(self) -> Path:
        """Path al archivo de triples de ejemplo"""
        return self.data_directory / "triples.jsonl"

    @property
    def DEFAULT_REPORT_FILE(self) -> Path:
        """Path al reporte de verificación por defecto"""
        return self.reports_directory / "verification.json"

    def log_level(self) -> str:
        """Nivel de logging efectivo: INFO en modo debug."""
        return "INFO" if self.DEBUG else self.LOG_LEVEL.upper()


# ============================================================================
# SINGLETON - INSTANCIA ÚNICA DE CONFIGURACIÓN
# ============================================================================

@lru_cache()
def get_settings() -> Settings:
    """
    Retorna una instancia singleton de Settings.

    El decorador @lru_cache asegura que solo se cree una instancia.
    Los flags de la línea de comandos nunca la modifican: se pasan
    explícitamente a cada operación.

    Returns:
        Settings: Instancia única de configuración
    """
    return Settings()


# ============================================================================
# EJEMPLO DE USO
# ============================================================================

if __name__ == "__main__":
    config = get_settings()

    print("=" * 60)
    print("⚙️  CONFIGURACIÓN DE NAPOLEON TOOLKIT")
    print("=" * 60)
    print(f"📐 App Name: {config.APP_NAME}")
    print(f"🐛 Debug Mode: {config.DEBUG}")
    print(f"📏 Tolerancia colineal: {config.COLLINEAR_TOL:g}")
    print(f"🎯 Oráculo: grid={config.ORACLE_GRID_N}, refine={config.ORACLE_REFINE_ITERS}")
    print(f"📁 Data Directory: {config.data_directory}")
    print("=" * 60)
