"""
bordlab - Main Entry Point
Command-line toolkit for face-word 2-complexes, collars and group cobordisms
"""
import logging
import sys

from bordlab.config import config
from bordlab.cli import run

logging.basicConfig(
    level=config.get('logging', 'level', default='INFO'),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)


def main() -> int:
    logger.debug(f"bordlab {' '.join(sys.argv[1:])}")
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
