from app.cli.commands.build import build
from app.cli.commands.estimate import estimate
from app.cli.commands.simulate import simulate
from app.cli.commands.verify import verify

__all__ = ["build", "estimate", "simulate", "verify"]
