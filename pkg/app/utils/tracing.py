from __future__ import annotations

from contextlib import contextmanager
from typing import Iterator, Union

try:  # Optional OpenTelemetry import
    from opentelemetry import trace
except Exception:  # pragma: no cover
    trace = None

Attribute = Union[str, int, float, bool]


@contextmanager
def traced_span(name: str, **attributes: Attribute) -> Iterator[None]:
    """Span around one service call; attributes are the automaton sizes and caps."""
    if trace:
        tracer = trace.get_tracer("syncideal")
        with tracer.start_as_current_span(name) as span:
            for key, value in attributes.items():
                span.set_attribute(f"syncideal.{key}", value)
            yield
    else:
        yield
