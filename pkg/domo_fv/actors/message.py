"""
 Copyright © 2012-2025 Vaughn Vernon. All rights reserved.
 Copyright © 2012-2025 Kalele, Inc. All rights reserved.

 Licensed under the Reciprocal Public License 1.5

 See: LICENSE.md in repository root directory
 See: https://opensource.org/license/rpl-1-5
"""

"""
Message - A queued method call on an actor and the promise answering it.
"""

import asyncio
from typing import TYPE_CHECKING, Any, Callable, Generator, Generic, Optional, TypeVar

if TYPE_CHECKING:
    from domo_fv.actors.actor import Actor

T = TypeVar("T")


class DeferredPromise(Generic[T]):
    """A promise resolved or rejected by the mailbox that delivers its message."""

    def __init__(self) -> None:
        """Initialize the promise on the running event loop."""
        self._future: asyncio.Future[T] = asyncio.get_running_loop().create_future()

    def resolve(self, value: T) -> None:
        """
        Resolve the promise with a value.

        Args:
            value: The value to resolve with
        """
        if not self._future.done():
            self._future.set_result(value)

    def reject(self, error: BaseException) -> None:
        """
        Reject the promise with an error.

        Args:
            error: The exception to reject with
        """
        if not self._future.done():
            self._future.set_exception(error)

    def is_done(self) -> bool:
        return self._future.done()

    @property
    def future(self) -> "asyncio.Future[T]":
        return self._future

    def __await__(self) -> Generator[Any, None, T]:
        return self._future.__await__()


class Message:
    """
    One method call queued for an actor.

    Delivery runs the call and settles the promise. A failure rejects the promise,
    suspends the actor's mailbox and hands the actor to the stage for supervision.
    """

    def __init__(
        self,
        actor: "Actor",
        function: Callable[["Actor"], Any],
        deferred: DeferredPromise,
        representation: str
    ) -> None:
        """
        Initialize the message.

        Args:
            actor: Target actor
            function: Call executed against the actor
            deferred: Promise settled with the outcome
            representation: Debug text such as "run_case(RunConfig(...))"
        """
        self._to = actor
        self._function = function
        self._deferred = deferred
        self._representation = representation

    def to(self) -> "Actor":
        return self._to

    def deferred(self) -> DeferredPromise:
        return self._deferred

    def representation(self) -> str:
        return self._representation

    async def deliver(self) -> None:
        """Execute the call against the target actor."""
        actor = self._to
        if actor.is_stopped():
            self._deferred.resolve(None)
            return

        try:
            result = self._function(actor)
            if hasattr(result, "__await__"):
                result = await result
            self._deferred.resolve(result)
        except Exception as error:
            actor.logger().debug(
                "message failed", actor=actor.name(), message=self._representation, reason=str(error)
            )
            self._deferred.reject(error)
            actor.environment().mailbox().suspend()
            await actor.stage().handle_failure_of(actor, error)

    def __repr__(self) -> str:
        return f"Message({self._representation})"


def describe_call(name: str, args: tuple, kwargs: dict, limit: Optional[int] = 80) -> str:
    """Short text of a method call for logs."""
    parts = [repr(arg) for arg in args] + [f"{key}={value!r}" for key, value in kwargs.items()]
    text = f"{name}({', '.join(parts)})"
    if limit is not None and len(text) > limit:
        text = text[:limit - 3] + "..."
    return text
