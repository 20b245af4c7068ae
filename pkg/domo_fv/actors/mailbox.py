"""
 Copyright © 2012-2025 Vaughn Vernon. All rights reserved.
 Copyright © 2012-2025 Kalele, Inc. All rights reserved.

 Licensed under the Reciprocal Public License 1.5

 See: LICENSE.md in repository root directory
 See: https://opensource.org/license/rpl-1-5
"""

"""
Mailbox - Unbounded FIFO message queue with a single dispatch task.

At most one dispatch task drains the queue at a time, so an actor handles its
messages strictly in arrival order, one after the other.
"""

import asyncio
from collections import deque
from typing import Deque, Optional

from domo_fv.actors.message import Message


class Mailbox:
    """FIFO mailbox that can be suspended, resumed and closed."""

    def __init__(self) -> None:
        self._queue: Deque[Message] = deque()
        self._closed = False
        self._suspended = False
        self._dispatching = False
        self._task: Optional[asyncio.Task] = None

    def send(self, message: Message) -> None:
        """
        Enqueue a message and start dispatching if idle.

        A closed mailbox settles the message's promise with None at once.

        Args:
            message: The message to enqueue
        """
        if self._closed:
            message.deferred().resolve(None)
            return
        self._queue.append(message)
        self._start_dispatch()

    def _start_dispatch(self) -> None:
        if not self._suspended and not self._closed and not self._dispatching and self._queue:
            self._dispatching = True
            self._task = asyncio.get_running_loop().create_task(self._dispatch_all())

    async def _dispatch_all(self) -> None:
        try:
            while self._queue and not self._suspended and not self._closed:
                await self._queue.popleft().deliver()
        finally:
            self._dispatching = False
        # messages may arrive between the last delivery and the flag reset
        self._start_dispatch()

    def suspend(self) -> None:
        """Stop delivering after the current message."""
        self._suspended = True

    def resume(self) -> None:
        """Continue delivering queued messages."""
        self._suspended = False
        self._start_dispatch()

    def close(self) -> None:
        """Refuse further messages; queued ones are settled with None."""
        self._closed = True
        while self._queue:
            self._queue.popleft().deferred().resolve(None)

    async def drain(self) -> None:
        """Wait until the delivery in progress, if any, has finished."""
        if self._task is not None and not self._task.done():
            await self._task

    def is_suspended(self) -> bool:
        return self._suspended

    def is_closed(self) -> bool:
        return self._closed

    def is_receivable(self) -> bool:
        return len(self._queue) > 0

    def size(self) -> int:
        return len(self._queue)

    def __str__(self) -> str:
        return (
            f"Mailbox(size={len(self._queue)}, suspended={self._suspended}, "
            f"closed={self._closed}, dispatching={self._dispatching})"
        )
