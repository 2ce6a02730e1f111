"""
equichern - Unified Configuration
Supports development, production and test runs of the verification engine
"""
import os
from pathlib import Path
from dotenv import load_dotenv

# Load .env file if it exists (for local development)
load_dotenv()


def _flag(name: str, default: str) -> bool:
    return os.getenv(name, default).lower() == "true"


class Config:
    """Base configuration - works for all environments"""

    ENV = "base"

    # ─── Storage ─────────────────────────────────────────────────
    # For local dev: ../data/ (outside src/)
    DATA_DIR = os.getenv("EQUICHERN_DATA_DIR", str(Path(__file__).parent.parent / "data"))
    DATABASE_URI = os.getenv(
        "EQUICHERN_DATABASE_URI", f"sqlite:///{Path(DATA_DIR) / 'equichern.db'}"
    )
    SQL_ECHO = _flag("SQL_ECHO", "False")

    REPORTS_DIR = os.getenv("EQUICHERN_REPORTS_DIR", str(Path(DATA_DIR) / "reports"))
    SCENARIOS_DIR = os.getenv(
        "EQUICHERN_SCENARIOS_DIR", str(Path(__file__).parent.parent / "scenarios")
    )

    # ─── Verification ────────────────────────────────────────────
    WORKERS = int(os.getenv("EQUICHERN_WORKERS", "1"))
    DEFAULT_SEED = int(os.getenv("EQUICHERN_SEED", "20240601"))
    SAMPLE_COUNT = int(os.getenv("EQUICHERN_SAMPLES", "200"))  # randomized inputs per check
    EXHAUSTIVE_BAND = int(os.getenv("EQUICHERN_EXHAUSTIVE_BAND", "1"))

    # ─── Cache ───────────────────────────────────────────────────
    CACHE_ENABLED = _flag("EQUICHERN_CACHE", "True")
    CACHE_SPOT_CHECKS = int(os.getenv("EQUICHERN_CACHE_SPOT_CHECKS", "5"))

    # ─── Logging ─────────────────────────────────────────────────
    LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")

    # ─── Directory Creation ──────────────────────────────────────
    @classmethod
    def ensure_directories(cls):
        """Create all necessary directories"""
        directories = [
            Path(cls.DATA_DIR),
            Path(cls.REPORTS_DIR),
        ]

        for directory in directories:
            directory.mkdir(parents=True, exist_ok=True)

    @classmethod
    def init_app(cls):
        """Prepare the runtime for this config"""
        from logging_equichern import set_level

        cls.ensure_directories()
        set_level(cls.LOG_LEVEL)


class DevelopmentConfig(Config):
    """Development-specific settings"""
    ENV = "development"
    SAMPLE_COUNT = int(os.getenv("EQUICHERN_SAMPLES", "40"))


class ProductionConfig(Config):
    """Production-specific settings (CI and archived verification runs)"""
    ENV = "production"

    # In production, require an explicit data directory
    def __init__(self):
        if not os.getenv("EQUICHERN_DATA_DIR"):
            raise ValueError("EQUICHERN_DATA_DIR must be set in production! Add to .env or environment")


class TestingConfig(Config):
    """Testing-specific settings"""
    ENV = "testing"
    DATABASE_URI = "sqlite:///:memory:"  # In-memory for tests
    WORKERS = 1
    SAMPLE_COUNT = 6
    CACHE_SPOT_CHECKS = 2


# ─── Config Selection ────────────────────────────────────────────
_configs = {
    'development': DevelopmentConfig,
    'production': ProductionConfig,
    'testing': TestingConfig,
}

def get_config(env=None):
    """Get configuration for specified environment"""
    if env is None:
        env = os.getenv('EQUICHERN_ENV', 'development')

    config_class = _configs.get(env, DevelopmentConfig)
    return config_class()
