"""
 Copyright © 2012-2025 Vaughn Vernon. All rights reserved.
 Copyright © 2012-2025 Kalele, Inc. All rights reserved.

 Licensed under the Reciprocal Public License 1.5

 See: LICENSE.md in repository root directory
 See: https://opensource.org/license/rpl-1-5
"""

"""
Supervision - Directives applied when an actor's message fails.
"""

from abc import ABC, abstractmethod
from enum import Enum
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from domo_fv.actors.actor import Actor


class SupervisionDirective(Enum):
    """Directives for handling actor failures."""

    RESUME = "RESUME"      # Continue with the next queued message
    STOP = "STOP"          # Stop the actor; queued messages are settled with None
    ESCALATE = "ESCALATE"  # Stop the actor and hand the error to the stage owner


class Supervisor(ABC):
    """Decides and applies a directive for a failed actor."""

    @abstractmethod
    def decide_directive(self, error: Exception, actor: "Actor") -> SupervisionDirective:
        """
        Decide which directive to apply.

        Args:
            error: The exception raised while handling a message
            actor: The failed actor

        Returns:
            The directive to apply
        """
        pass

    async def inform(self, error: Exception, actor: "Actor") -> SupervisionDirective:
        """
        Handle an actor failure.

        Args:
            error: The exception that caused the failure
            actor: The failed actor

        Returns:
            The directive that was applied
        """
        directive = self.decide_directive(error, actor)
        if directive == SupervisionDirective.RESUME:
            actor.environment().mailbox().resume()
        else:
            await actor.stop()
        return directive


class DefaultSupervisor(Supervisor):
    """Resumes after every failure; the caller still sees the rejected promise."""

    def decide_directive(self, error: Exception, actor: "Actor") -> SupervisionDirective:
        return SupervisionDirective.RESUME
