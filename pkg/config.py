import os
from dotenv import load_dotenv

load_dotenv()


def _int_env(name, default):
    value = os.getenv(name)
    if value is None or value.strip() == '':
        return default
    try:
        return int(value)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {value!r}")


class Config:
    """Base configuration"""
    LOG_DIR = os.getenv('CATPOLY_LOG_DIR', 'Logs')
    LOG_MAX_BYTES = 10 * 1024 * 1024  # 10MB
    LOG_BACKUP_COUNT = 30

    # Enumeration caps (override with env vars, or --force per invocation)
    MAX_COMPOSITION_N = _int_env('CATPOLY_MAX_COMPOSITION_N', 14)
    MAX_TREE_N = _int_env('CATPOLY_MAX_TREE_N', 16)
    MAX_CATERPILLAR_N = _int_env('CATPOLY_MAX_CATERPILLAR_N', 20)
    MAX_BRUTEFORCE_EDGES = _int_env('CATPOLY_MAX_BRUTEFORCE_EDGES', 24)

    DEFAULT_JOBS = _int_env('CATPOLY_DEFAULT_JOBS', 1)
    DEFAULT_SEED = _int_env('CATPOLY_DEFAULT_SEED', 20100531)
    CHUNK_SIZE = _int_env('CATPOLY_CHUNK_SIZE', 256)

    SHOW_PROGRESS = os.getenv('CATPOLY_PROGRESS', '1') not in ('0', 'false', 'no')


class DevelopmentConfig(Config):
    """Development configuration"""
    DEBUG = True
    TESTING = False


class ProductionConfig(Config):
    """Production configuration"""
    DEBUG = False
    TESTING = False


class TestingConfig(Config):
    """Testing configuration"""
    DEBUG = True
    TESTING = True
    LOG_DIR = None
    SHOW_PROGRESS = False
    CHUNK_SIZE = 64


config = {
    'development': DevelopmentConfig,
    'production': ProductionConfig,
    'testing': TestingConfig,
    'default': ProductionConfig
}


def get_config(name=None):
    """Return the active configuration class.

    Resolution order: explicit name, CATPOLY_ENV, then 'default'.
    """
    name = name or os.getenv('CATPOLY_ENV', 'default')
    try:
        return config[name]
    except KeyError:
        raise ValueError(f"Unknown configuration {name!r}; expected one of {sorted(config)}")
