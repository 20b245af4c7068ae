"""
 Copyright © 2012-2025 Vaughn Vernon. All rights reserved.
 Copyright © 2012-2025 Kalele, Inc. All rights reserved.

 Licensed under the Reciprocal Public License 1.5

 See: LICENSE.md in repository root directory
 See: https://opensource.org/license/rpl-1-5
"""

"""
Actor - Base class for actors and the environment injected into them.
"""

from abc import ABC
from typing import TYPE_CHECKING, Optional

if TYPE_CHECKING:
    from domo_fv.actors.logger import Logger
    from domo_fv.actors.mailbox import Mailbox
    from domo_fv.actors.stage import Stage
    from domo_fv.actors.supervisor import Supervisor


class Environment:
    """Runtime context of one actor: name, mailbox, stage, logger and supervisor."""

    def __init__(
        self,
        name: str,
        mailbox: "Mailbox",
        stage: "Stage",
        logger: "Logger",
        supervisor: Optional["Supervisor"] = None
    ) -> None:
        self._name = name
        self._mailbox = mailbox
        self._stage = stage
        self._logger = logger
        self._supervisor = supervisor

    def name(self) -> str:
        return self._name

    def mailbox(self) -> "Mailbox":
        return self._mailbox

    def stage(self) -> "Stage":
        return self._stage

    def logger(self) -> "Logger":
        return self._logger

    def supervisor(self) -> Optional["Supervisor"]:
        return self._supervisor


class Actor(ABC):
    """
    Base class for all actors.

    Actors handle their messages one at a time through their mailbox. The
    environment is injected by the stage after construction.
    """

    def __init__(self) -> None:
        self._environment: Optional[Environment] = None
        self._stopped = False

    def set_environment(self, environment: Environment) -> None:
        self._environment = environment

    def environment(self) -> Environment:
        """
        Get the actor's environment.

        Raises:
            RuntimeError: If the actor was not created through a stage
        """
        if self._environment is None:
            raise RuntimeError("Actor environment not initialized")
        return self._environment

    async def before_start(self) -> None:
        """Hook called before the actor starts."""
        pass

    async def start(self) -> None:
        await self.before_start()

    async def before_stop(self) -> None:
        """Hook called before the actor stops."""
        pass

    async def after_stop(self) -> None:
        """Hook called after the actor stops."""
        pass

    async def stop(self) -> None:
        """Stop the actor and close its mailbox."""
        if not self._stopped:
            await self.before_stop()
            self._stopped = True
            self.environment().mailbox().close()
            await self.after_stop()

    def is_stopped(self) -> bool:
        return self._stopped

    def name(self) -> str:
        return self.environment().name()

    def logger(self) -> "Logger":
        return self.environment().logger()

    def stage(self) -> "Stage":
        return self.environment().stage()

    def __repr__(self) -> str:
        name = self._environment.name() if self._environment is not None else "unbound"
        return f"{type(self).__name__}({name})"
