"""Enumeration caps read from the active configuration."""
import logging

from config import get_config
from catpoly.exceptions import CapExceededError

logger = logging.getLogger(__name__)


def cap_value(setting: str) -> int:
    return getattr(get_config(), setting)


def enforce_cap(setting: str, value: int, cost: str, force: bool = False) -> None:
    """Refuse work beyond ``config.<setting>`` unless forced.

    Args:
        setting: name of the config attribute holding the cap, e.g. 'MAX_TREE_N'
        value: the requested size
        cost: human readable cost of the enumeration, shown in the error
        force: proceed anyway (a warning is logged)
    """
    cap = cap_value(setting)
    if value <= cap:
        return
    if force:
        logger.warning(f"⚠️  {setting}={cap} overridden for size {value}; expected cost: {cost}")
        return
    raise CapExceededError(
        f"size {value} exceeds {setting}={cap} (cost: {cost}); "
        f"raise CATPOLY_{setting} or pass --force"
    )
