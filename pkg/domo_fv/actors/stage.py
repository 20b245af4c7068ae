"""
 Copyright © 2012-2025 Vaughn Vernon. All rights reserved.
 Copyright © 2012-2025 Kalele, Inc. All rights reserved.

 Licensed under the Reciprocal Public License 1.5

 See: LICENSE.md in repository root directory
 See: https://opensource.org/license/rpl-1-5
"""

"""
Stage - Creates actors, routes their failures and owns the compute executor.

Solver runs are CPU-bound, so actors hand them to the stage's thread pool with
run_blocking() and stay responsive on the event loop meanwhile.
"""

import asyncio
import functools
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, List, Optional, Set, Type, TypeVar

from domo_fv.actors.actor import Actor, Environment
from domo_fv.actors.logger import DefaultLogger, Logger
from domo_fv.actors.mailbox import Mailbox
from domo_fv.actors.proxy import ActorProxy
from domo_fv.actors.supervisor import DefaultSupervisor, SupervisionDirective, Supervisor

A = TypeVar("A", bound=Actor)
R = TypeVar("R")


class Stage:
    """Actor runtime for one sweep."""

    def __init__(
        self,
        logger: Logger = DefaultLogger,
        workers: int = 1,
        supervisor: Optional[Supervisor] = None
    ) -> None:
        """
        Initialize the stage.

        Args:
            logger: Logger handed to every actor
            workers: Threads in the compute executor (1 keeps runs sequential)
            supervisor: Supervisor for actors created without one
        """
        if workers < 1:
            raise ValueError(f"workers must be >= 1, got {workers}")
        self._logger = logger
        self._workers = workers
        self._executor = ThreadPoolExecutor(max_workers=workers, thread_name_prefix="domo-fv")
        self._default_supervisor = supervisor or DefaultSupervisor()
        self._actors: List[Actor] = []
        self._starting: Set[asyncio.Task] = set()
        self._escalations: List[Exception] = []
        self._closed = False

    def actor_for(
        self,
        actor_type: Type[A],
        *args: Any,
        name: Optional[str] = None,
        supervisor: Optional[Supervisor] = None,
        **kwargs: Any
    ) -> Any:
        """
        Create an actor and return its proxy.

        Args:
            actor_type: Actor class
            *args: Constructor arguments
            name: Actor name used in logs (default: class name and index)
            supervisor: Supervisor for this actor (default: the stage's)
            **kwargs: Constructor keyword arguments

        Returns:
            ActorProxy whose method calls return DeferredPromises
        """
        if self._closed:
            raise RuntimeError("stage is closed")
        mailbox = Mailbox()
        actor = actor_type(*args, **kwargs)
        actor.set_environment(Environment(
            name=name or f"{actor_type.__name__}-{len(self._actors)}",
            mailbox=mailbox,
            stage=self,
            logger=self._logger,
            supervisor=supervisor or self._default_supervisor
        ))
        self._actors.append(actor)

        task = asyncio.get_running_loop().create_task(actor.start())
        self._starting.add(task)
        task.add_done_callback(self._starting.discard)
        return ActorProxy(actor, mailbox)

    async def run_blocking(self, function: Callable[..., R], *args: Any, **kwargs: Any) -> R:
        """
        Run a blocking call on the compute executor.

        Args:
            function: Callable to run
            *args: Positional arguments
            **kwargs: Keyword arguments

        Returns:
            The call's result
        """
        loop = asyncio.get_running_loop()
        return await loop.run_in_executor(self._executor, functools.partial(function, *args, **kwargs))

    async def handle_failure_of(self, actor: Actor, error: Exception) -> None:
        """
        Route a failed actor to its supervisor.

        Args:
            actor: The failed actor
            error: The exception raised by its message
        """
        supervisor = actor.environment().supervisor() or self._default_supervisor
        directive = await supervisor.inform(error, actor)
        if directive == SupervisionDirective.ESCALATE:
            self._logger.error("failure escalated", error, actor=actor.name())
            self._escalations.append(error)
        else:
            self._logger.debug("failure supervised", actor=actor.name(), directive=directive.value)

    def escalations(self) -> List[Exception]:
        """Errors escalated by supervisors, oldest first."""
        return list(self._escalations)

    def logger(self) -> Logger:
        return self._logger

    def workers(self) -> int:
        return self._workers

    def actor_count(self) -> int:
        return len(self._actors)

    async def close(self) -> None:
        """Stop every actor, let deliveries in progress finish, and shut the executor down."""
        if self._closed:
            return
        self._closed = True
        for actor in self._actors:
            await actor.stop()
        for actor in self._actors:
            await actor.environment().mailbox().drain()
        self._executor.shutdown(wait=True)
