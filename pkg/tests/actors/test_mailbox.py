"""
Mailbox tests - Ordered delivery, suspension and closing.
"""

import asyncio

import pytest

from domo_fv.actors.actor import Actor
from domo_fv.actors.logger import ConsoleLogger, LogLevel
from domo_fv.actors.mailbox import Mailbox
from domo_fv.actors.stage import Stage


# ============================================================================
# Test Actor
# ============================================================================

class CounterActor(Actor):
    def __init__(self) -> None:
        super().__init__()
        self._count = 0
        self._seen = []

    async def increment(self, tag: str = "") -> int:
        await asyncio.sleep(0)
        self._count += 1
        self._seen.append(tag)
        return self._count

    def value(self) -> int:
        return self._count

    def seen(self) -> list:
        return list(self._seen)


# ============================================================================
# Fixtures
# ============================================================================

@pytest.fixture
async def stage():
    s = Stage(ConsoleLogger("test", LogLevel.ERROR))
    yield s
    await s.close()


def mailbox_of(proxy) -> Mailbox:
    return proxy.environment().mailbox()


# ============================================================================
# Tests
# ============================================================================

@pytest.mark.asyncio
async def test_messages_are_delivered_in_order(stage):
    """Test FIFO delivery through the proxy."""
    counter = stage.actor_for(CounterActor)

    promises = [counter.increment(tag) for tag in "abcde"]
    results = [await promise for promise in promises]

    assert results == [1, 2, 3, 4, 5], f"Unexpected results {results}"
    assert await counter.seen() == list("abcde")


@pytest.mark.asyncio
async def test_synchronous_methods_bypass_the_mailbox(stage):
    """Test that name() is answered directly."""
    counter = stage.actor_for(CounterActor, name="counter-1")

    assert counter.name() == "counter-1"
    assert counter.is_stopped() is False


@pytest.mark.asyncio
async def test_mailbox_starts_unsuspended(stage):
    """Test initial mailbox state."""
    counter = stage.actor_for(CounterActor)
    mailbox = mailbox_of(counter)

    assert mailbox.is_suspended() is False
    assert mailbox.is_closed() is False
    assert mailbox.size() == 0


@pytest.mark.asyncio
async def test_messages_queue_during_suspension(stage):
    """Test that a suspended mailbox holds messages until resumed."""
    counter = stage.actor_for(CounterActor)
    mailbox = mailbox_of(counter)

    mailbox.suspend()
    first = counter.increment()
    second = counter.increment()
    await asyncio.sleep(0.05)

    assert not first.is_done(), "Message delivered while suspended"
    assert mailbox.size() == 2
    assert mailbox.is_receivable()

    mailbox.resume()

    assert await first == 1
    assert await second == 2
    assert mailbox.size() == 0


@pytest.mark.asyncio
async def test_close_settles_queued_messages_with_none(stage):
    """Test that closing resolves queued promises with None."""
    counter = stage.actor_for(CounterActor)
    mailbox = mailbox_of(counter)

    mailbox.suspend()
    queued = counter.increment()
    mailbox.close()

    assert await queued is None
    assert mailbox.is_closed()


@pytest.mark.asyncio
async def test_send_to_closed_mailbox_resolves_none(stage):
    """Test that messages sent after close are answered with None."""
    counter = stage.actor_for(CounterActor)
    mailbox_of(counter).close()

    assert await counter.increment() is None


@pytest.mark.asyncio
async def test_proxy_rejects_attribute_assignment(stage):
    """Test that the proxy is read-only."""
    counter = stage.actor_for(CounterActor)

    with pytest.raises(AttributeError):
        counter.value = 5

    with pytest.raises(AttributeError):
        counter.does_not_exist()
