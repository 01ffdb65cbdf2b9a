import os
import sys
import logging
from contextvars import ContextVar
from logging.handlers import RotatingFileHandler

current_command: ContextVar[str] = ContextVar('current_command', default='-')


class CommandFormatter(logging.Formatter):
    """Custom formatter that includes the running CLI command"""
    def format(self, record):
        record.command = current_command.get()
        return super().format(record)


def setup_logging(cfg):
    """Configure logging for the CLI

    Log level can be controlled via CATPOLY_LOG_LEVEL environment variable.
    Valid values: DEBUG, INFO, WARNING, ERROR, CRITICAL
    Defaults to DEBUG if cfg.DEBUG is True, otherwise WARNING.
    """
    formatter = CommandFormatter('%(asctime)s %(levelname)s [%(command)s] %(name)s: %(message)s')

    # Console handler (stderr, so command output on stdout stays clean)
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(formatter)
    handlers = [console_handler]

    # File handler
    if cfg.LOG_DIR:
        os.makedirs(cfg.LOG_DIR, exist_ok=True)
        file_handler = RotatingFileHandler(
            os.path.join(cfg.LOG_DIR, 'catpoly.log'),
            maxBytes=cfg.LOG_MAX_BYTES,
            backupCount=cfg.LOG_BACKUP_COUNT
        )
        file_handler.setFormatter(formatter)
        handlers.append(file_handler)

    log_level_str = os.getenv('CATPOLY_LOG_LEVEL', 'DEBUG' if cfg.DEBUG else 'WARNING')
    log_level = getattr(logging, log_level_str.upper(), logging.WARNING)

    logging.basicConfig(level=log_level, handlers=handlers, force=True)

    return logging.getLogger('catpoly')
