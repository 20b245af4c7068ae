"""
Supervision tests - RESUME, STOP and ESCALATE after a failed message.
"""

import asyncio

import pytest

from domo_fv.actors.actor import Actor
from domo_fv.actors.logger import ConsoleLogger, LogLevel
from domo_fv.actors.stage import Stage
from domo_fv.actors.supervisor import SupervisionDirective, Supervisor


# ============================================================================
# Test Actor and Supervisors
# ============================================================================

class WorkerActor(Actor):
    def __init__(self) -> None:
        super().__init__()
        self._done = 0

    async def work(self) -> int:
        self._done += 1
        return self._done

    async def fail(self, error: Exception) -> None:
        raise error


class FixedSupervisor(Supervisor):
    def __init__(self, directive: SupervisionDirective) -> None:
        self._directive = directive
        self.informed = []

    def decide_directive(self, error: Exception, actor: Actor) -> SupervisionDirective:
        self.informed.append(type(error).__name__)
        return self._directive


def make_stage(directive: SupervisionDirective) -> Stage:
    return Stage(ConsoleLogger("test", LogLevel.ERROR + 10), supervisor=FixedSupervisor(directive))


# ============================================================================
# Tests
# ============================================================================

@pytest.mark.asyncio
async def test_default_supervisor_resumes():
    """Test that a failure is seen by the caller and the actor keeps working."""
    stage = Stage(ConsoleLogger("test", LogLevel.ERROR + 10))
    try:
        worker = stage.actor_for(WorkerActor)

        failing = worker.fail(ValueError("boom"))
        following = worker.work()

        with pytest.raises(ValueError, match="boom"):
            await failing
        assert await following == 1, "Message after the failure should be delivered"
        assert worker.is_stopped() is False
    finally:
        await stage.close()


@pytest.mark.asyncio
async def test_stop_settles_remaining_messages_with_none():
    """Test that STOP stops the actor and answers queued messages with None."""
    stage = make_stage(SupervisionDirective.STOP)
    try:
        worker = stage.actor_for(WorkerActor)

        failing = worker.fail(RuntimeError("stop me"))
        queued = [worker.work(), worker.work()]

        with pytest.raises(RuntimeError):
            await failing
        assert [await promise for promise in queued] == [None, None]
        assert worker.is_stopped() is True
        assert await worker.work() is None
    finally:
        await stage.close()


@pytest.mark.asyncio
async def test_escalate_records_the_error_on_the_stage():
    """Test that ESCALATE stops the actor and keeps the error for the owner."""
    stage = make_stage(SupervisionDirective.ESCALATE)
    try:
        worker = stage.actor_for(WorkerActor)
        error = KeyError("unexpected")

        with pytest.raises(KeyError):
            await worker.fail(error)
        await asyncio.sleep(0.01)

        assert stage.escalations() == [error], f"Escalations: {stage.escalations()}"
        assert worker.is_stopped() is True
    finally:
        await stage.close()


@pytest.mark.asyncio
async def test_close_waits_for_supervision_of_the_last_failure():
    """Test that escalations are complete once the stage has closed."""
    stage = make_stage(SupervisionDirective.ESCALATE)
    worker = stage.actor_for(WorkerActor)
    error = KeyError("late")

    with pytest.raises(KeyError):
        await worker.fail(error)
    await stage.close()

    assert stage.escalations() == [error]


@pytest.mark.asyncio
async def test_per_actor_supervisor_overrides_stage_default():
    """Test that an actor-specific supervisor is consulted."""
    stage = make_stage(SupervisionDirective.STOP)
    resumer = FixedSupervisor(SupervisionDirective.RESUME)
    try:
        worker = stage.actor_for(WorkerActor, supervisor=resumer)

        with pytest.raises(ValueError):
            await worker.fail(ValueError("once"))
        assert await worker.work() == 1

        assert resumer.informed == ["ValueError"]
    finally:
        await stage.close()
