import functools
from dataclasses import dataclass, field
from typing import Annotated, Union, get_args, get_origin, get_type_hints

from comfort_vitals.logger import logger


def _strip_implicit_optional(hint):
    """Undo Python 3.10 wrapping `Annotated[...] = None` hints in `Optional[...]`."""
    if get_origin(hint) is Union:
        args = get_args(hint)
        if len(args) == 2 and type(None) in args:
            inner = args[0] if args[1] is type(None) else args[1]
            if get_origin(inner) is Annotated:
                return inner
    return hint


@dataclass(frozen=True)
class FuncMeta:
    """What a registered task is called and how its parameters are described."""

    name: str
    label: str
    description: str
    parameters: dict = field(default_factory=dict)


def comfort_func(name: str, label: str, description: str):
    """Register a task function.

    Parameter descriptions are read from the `Annotated` hints of the function.

    Args:
        name (str): Machine name, also the CLI subcommand.
        label (str): Human readable name.
        description (str): One line summary.
    """

    def decorator(func):
        hints = {k: _strip_implicit_optional(v) for k, v in get_type_hints(func, include_extras=True).items()}
        parameters = {
            argument: get_args(hint)[1]
            for argument, hint in hints.items()
            if argument != "return" and get_origin(hint) is Annotated
        }

        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            logger.debug(f"Running task {name}")
            return func(*args, **kwargs)

        wrapper.comfort_meta = FuncMeta(name=name, label=label, description=description, parameters=parameters)
        return wrapper

    return decorator
