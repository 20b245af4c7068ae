"""
 Copyright © 2012-2025 Vaughn Vernon. All rights reserved.
 Copyright © 2012-2025 Kalele, Inc. All rights reserved.

 Licensed under the Reciprocal Public License 1.5

 See: LICENSE.md in repository root directory
 See: https://opensource.org/license/rpl-1-5
"""

"""
Actor Proxy - Turns method calls into mailbox messages.

Calling a public method on the proxy enqueues the call and returns a
DeferredPromise at once; awaiting the promise yields the method's result.
"""

from typing import TYPE_CHECKING, Any, Set

from domo_fv.actors.message import DeferredPromise, Message, describe_call

if TYPE_CHECKING:
    from domo_fv.actors.actor import Actor
    from domo_fv.actors.mailbox import Mailbox

# Answered directly, without queueing
SYNCHRONOUS_ACTOR_METHODS: Set[str] = {
    "name",
    "logger",
    "stage",
    "environment",
    "is_stopped",
}


class ActorProxy:
    """Dynamic proxy in front of one actor."""

    def __init__(self, actor: "Actor", mailbox: "Mailbox") -> None:
        object.__setattr__(self, "_actor", actor)
        object.__setattr__(self, "_mailbox", mailbox)

    def __getattr__(self, name: str) -> Any:
        actor = object.__getattribute__(self, "_actor")
        mailbox = object.__getattribute__(self, "_mailbox")

        if name.startswith("_"):
            raise AttributeError(name)
        if name in SYNCHRONOUS_ACTOR_METHODS:
            return getattr(actor, name)

        attr = getattr(actor, name, None)
        if attr is None:
            raise AttributeError(f"'{type(actor).__name__}' object has no attribute '{name}'")
        if not callable(attr):
            return attr

        def message_wrapper(*args: Any, **kwargs: Any) -> DeferredPromise:
            deferred: DeferredPromise = DeferredPromise()

            def execute_on_actor(target: "Actor") -> Any:
                return getattr(target, name)(*args, **kwargs)

            mailbox.send(Message(actor, execute_on_actor, deferred, describe_call(name, args, kwargs)))
            return deferred

        return message_wrapper

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError(f"Cannot set attribute '{name}' on ActorProxy")

    def __repr__(self) -> str:
        return f"ActorProxy({object.__getattribute__(self, '_actor')!r})"
