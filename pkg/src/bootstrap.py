#!/usr/bin/env python3
"""
First-run setup for equichern
Creates the data directories and database tables and validates the presets
"""
import sys

from config import get_config


def check_config(config) -> bool:
    """Check that every setting the engine reads is present"""
    print("Checking configuration...")
    required_settings = [
        'DATA_DIR',
        'DATABASE_URI',
        'REPORTS_DIR',
        'SCENARIOS_DIR',
        'WORKERS',
        'SAMPLE_COUNT',
        'DEFAULT_SEED',
    ]

    for setting in required_settings:
        if getattr(config, setting, None) is not None:
            print(f"  ✓ {setting}")
        else:
            print(f"  ✗ {setting} - MISSING!")
            return False
    if config.WORKERS < 1:
        print(f"  ✗ WORKERS must be at least 1, got {config.WORKERS}")
        return False
    print()
    return True


def create_directories(config) -> None:
    """Create all necessary directories"""
    print("Creating directories...")
    config.ensure_directories()
    for directory in (config.DATA_DIR, config.REPORTS_DIR):
        print(f"  ✓ {directory}")
    print()


def create_database(config) -> None:
    """Initialize the database with all tables"""
    print("Initializing database...")
    from verify_db import init_db

    init_db(config.DATABASE_URI, config.SQL_ECHO)
    print("  ✓ Database tables created")
    print()


def check_presets() -> bool:
    """Load and validate every built-in scenario"""
    print("Validating preset scenarios...")
    from harness import PRESETS, parse_scenario

    ok = True
    for name, text in PRESETS.items():
        try:
            scenario = parse_scenario(text)
            print(f"  ✓ {name} ({scenario.describe()})")
        except ValueError as e:
            print(f"  ✗ {name} - {e}")
            ok = False
    print()
    return ok


def bootstrap(config=None) -> bool:
    config = config or get_config()
    if not check_config(config):
        return False
    create_directories(config)
    try:
        create_database(config)
    except Exception as e:
        print(f"  ✗ Error creating database: {e}")
        return False
    return check_presets()


def main():
    print("=" * 60)
    print("equichern - Setup")
    print("=" * 60)
    print()

    try:
        config = get_config()
    except ValueError as e:
        print(f"  ✗ {e}")
        sys.exit(1)

    if not bootstrap(config):
        print("\nPlease fix the problems above before running verifications")
        sys.exit(1)

    print("=" * 60)
    print("Setup complete! You can now run a suite:")
    print("  equichern verify claims --scenario z4-torus2")
    print("=" * 60)


if __name__ == "__main__":
    main()
