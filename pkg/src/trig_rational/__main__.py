"""Entry point for python -m trig_rational."""

from .cli import main

if __name__ == "__main__":
    main()
