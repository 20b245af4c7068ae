"""
 Copyright © 2012-2025 Vaughn Vernon. All rights reserved.
 Copyright © 2012-2025 Kalele, Inc. All rights reserved.

 Licensed under the Reciprocal Public License 1.5

 See: LICENSE.md in repository root directory
 See: https://opensource.org/license/rpl-1-5
"""

"""
Actor runtime used to fan out solver runs: mailboxes, proxies, supervision and logging.
"""

from domo_fv.actors.actor import Actor, Environment
from domo_fv.actors.logger import ConsoleLogger, DefaultLogger, Logger, LogLevel
from domo_fv.actors.mailbox import Mailbox
from domo_fv.actors.message import DeferredPromise, Message
from domo_fv.actors.proxy import ActorProxy
from domo_fv.actors.stage import Stage
from domo_fv.actors.supervisor import DefaultSupervisor, SupervisionDirective, Supervisor

__all__ = [
    "Actor",
    "ActorProxy",
    "ConsoleLogger",
    "DefaultLogger",
    "DefaultSupervisor",
    "DeferredPromise",
    "Environment",
    "LogLevel",
    "Logger",
    "Mailbox",
    "Message",
    "Stage",
    "SupervisionDirective",
    "Supervisor",
]
