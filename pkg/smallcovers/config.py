"""Environment driven settings for enumeration caps and parallel planning."""
import functools


from pydantic import BaseSettings, validator


class Settings(BaseSettings):
    """
    Caps and tuning knobs, read from `SMALLCOVERS_*` environment variables.

    Attributes:
        dimension_cap (int): The largest BitMatrix side accepted on enumeration paths.
        enumeration_cap (int): The largest n for DAG and M(n) enumeration.
        long_run_enumeration_cap (int): The same cap once long runs are allowed.
        cube_bruteforce_cap (int): The largest n for brute force over cf(I^n).
        long_run_cube_bruteforce_cap (int): The same cap once long runs are allowed.
        partitions_per_job (int): How many candidate ranges are planned per worker.
    """

    dimension_cap: int = 16
    enumeration_cap: int = 5
    long_run_enumeration_cap: int = 6
    cube_bruteforce_cap: int = 3
    long_run_cube_bruteforce_cap: int = 3
    partitions_per_job: int = 4

    class Config:
        env_prefix = "SMALLCOVERS_"

    @validator("*")
    def _positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError("must be at least 1")

        return value

    def enumeration_limit(self, allow_long_runs: bool = False) -> int:
        """Get the DAG/M(n) enumeration cap for the given run mode."""
        return self.long_run_enumeration_cap if allow_long_runs else self.enumeration_cap

    def cube_bruteforce_limit(self, allow_long_runs: bool = False) -> int:
        """Get the cf(I^n) brute force cap for the given run mode."""
        return self.long_run_cube_bruteforce_cap if allow_long_runs else self.cube_bruteforce_cap


@functools.lru_cache(maxsize=None)
def get_settings() -> Settings:
    """Get the process wide settings, read once from the environment."""
    return Settings()


__all__ = ["Settings", "get_settings"]
