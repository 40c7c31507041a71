import logging
from concurrent.futures import ProcessPoolExecutor, as_completed
from typing import (
    TYPE_CHECKING,
    Any,
    Callable,
    Dict,
    Iterator,
    List,
    Optional,
    Sequence,
    Tuple,
    TypeVar,
    Union,
)

from ..config import Config
from ..data_model import *
from ..exceptions import *
from ..progress import QuietProgress

if TYPE_CHECKING:
    from rich.progress import Progress, TaskID

    from ..client import ModRep

T = TypeVar("T")


class ServiceClient:
    def __init__(self, modrep: "ModRep"):
        self.modrep = modrep

    @property
    def config(self) -> Config:
        return self.modrep.config

    @property
    def logger(self) -> logging.Logger:
        return self.modrep.logger

    def resolve_entry(self, entry: Union[TableEntry, Tuple[int, int]]) -> TableEntry:
        if isinstance(entry, TableEntry):
            return entry
        else:
            k, ell = entry
            return self.modrep.table.get(k, ell)

    def ordered_map(
        self,
        fn: Callable[..., T],
        tasks: Sequence[Tuple[Any, ...]],
        progress: Optional[Union["Progress", QuietProgress]] = None,
        task_id: Optional["TaskID"] = None,
        workers: Optional[int] = None,
    ) -> Iterator[T]:
        """
        Apply ``fn`` to each argument tuple and yield the results in task order.

        With more than one worker the tasks run in a process pool; results that finish
        early are held back until every earlier task has been yielded, so the output
        doesn't depend on the number of workers.
        """
        workers = workers if workers is not None else self.config.workers
        if workers == 1 or len(tasks) <= 1:
            for args in tasks:
                result = fn(*args)
                if progress is not None:
                    progress.advance(task_id)
                yield result
            return

        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures: Dict[Any, int] = {}
            try:
                for i, args in enumerate(tasks):
                    futures[executor.submit(fn, *args)] = i
                finished: Dict[int, T] = {}
                next_index = 0
                for future in as_completed(futures):
                    finished[futures[future]] = future.result()
                    if progress is not None:
                        progress.advance(task_id)
                    while next_index in finished:
                        yield finished.pop(next_index)
                        next_index += 1
            except KeyboardInterrupt:
                self.logger.warning("Received KeyboardInterrupt, canceling workers...")
                for future in futures:
                    future.cancel()
                executor.shutdown(wait=True)
                raise


def batches(items: Sequence[T], size: int) -> List[List[T]]:
    """
    Consecutive slices of at most ``size`` items.
    """
    return [list(items[i : i + size]) for i in range(0, len(items), size)]
