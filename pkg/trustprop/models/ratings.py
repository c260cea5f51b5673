"""
Rating table model.

Sparse user x item rating store with cached per-user means, per-item counts
and the global mean.
"""

from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from trustprop.exceptions import UnknownNodeError, ValidationError

Rating = Tuple[int, int, float]


class RatingTable:
    """
    Ratings keyed by dense user id (shared with the TrustGraph) and dense item id.

    User means are recomputed exactly whenever a user's ratings change.
    """

    def __init__(self, user_count: int, item_count: int,
                 scale: Tuple[float, float] = (1.0, 5.0),
                 item_labels: Optional[Sequence[str]] = None):
        """
        Initialize an empty rating table.

        Args:
            user_count: Number of users; ids are 0..user_count-1
            item_count: Number of items; ids are 0..item_count-1
            scale: Inclusive (min, max) rating bounds
            item_labels: Optional raw dataset id per dense item id

        Raises:
            ValidationError: If counts are negative or the scale is empty
        """
        if user_count < 0 or item_count < 0:
            raise ValidationError("User and item counts must be non-negative")
        low, high = scale
        if low > high:
            raise ValidationError(f"Rating scale {scale} is empty")
        if item_labels is not None and len(item_labels) != item_count:
            raise ValidationError("Item label table must have one entry per item")

        self.scale = (float(low), float(high))
        self.item_labels = list(item_labels) if item_labels is not None else None
        self._by_user: List[Dict[int, float]] = [{} for _ in range(user_count)]
        self._by_item: List[Dict[int, float]] = [{} for _ in range(item_count)]
        self._user_sum: List[float] = [0.0] * user_count
        self._user_mean: List[Optional[float]] = [None] * user_count
        self._total = 0.0
        self._count = 0

    @property
    def user_count(self) -> int:
        return len(self._by_user)

    @property
    def item_count(self) -> int:
        return len(self._by_item)

    def add_rating(self, user: int, item: int, value: float) -> None:
        """
        Store or overwrite a rating.

        Raises:
            ValidationError: If the value is outside the rating scale
            UnknownNodeError: If user or item is unknown
        """
        self._check_user(user)
        self._check_item(item)
        low, high = self.scale
        if not low <= value <= high:
            raise ValidationError(f"Rating {value} outside scale [{low}, {high}]")

        value = float(value)
        previous = self._by_user[user].get(item)
        if previous is not None:
            self._total -= previous
            self._count -= 1
        self._by_user[user][item] = value
        self._by_item[item][user] = value
        self._total += value
        self._count += 1
        self._refresh_user(user)

    def remove_rating(self, user: int, item: int) -> None:
        self._check_user(user)
        self._check_item(item)
        if item not in self._by_user[user]:
            raise UnknownNodeError(f"User {user} has not rated item {item}")
        value = self._by_user[user].pop(item)
        del self._by_item[item][user]
        self._total -= value
        self._count -= 1
        self._refresh_user(user)

    def rating(self, user: int, item: int) -> Optional[float]:
        self._check_user(user)
        self._check_item(item)
        return self._by_user[user].get(item)

    def user_ratings(self, user: int) -> Dict[int, float]:
        """Items rated by ``user`` mapped to their ratings (read-only view)."""
        self._check_user(user)
        return self._by_user[user]

    def item_raters(self, item: int) -> Dict[int, float]:
        """Users who rated ``item`` mapped to their ratings (read-only view)."""
        self._check_item(item)
        return self._by_item[item]

    def user_mean(self, user: int, exclude_item: Optional[int] = None) -> Optional[float]:
        """
        Mean rating of a user, optionally leaving one item out.

        Args:
            user: User id
            exclude_item: Item whose rating is left out of the mean

        Returns:
            The mean, or None when no rating remains
        """
        self._check_user(user)
        if exclude_item is None or exclude_item not in self._by_user[user]:
            return self._user_mean[user]
        remaining = len(self._by_user[user]) - 1
        if remaining == 0:
            return None
        held = self._by_user[user][exclude_item]
        return (self._user_sum[user] - held) / remaining

    def item_rating_count(self, item: int) -> int:
        self._check_item(item)
        return len(self._by_item[item])

    def item_rating_counts(self) -> List[int]:
        return [len(raters) for raters in self._by_item]

    @property
    def global_mean(self) -> Optional[float]:
        return self._total / self._count if self._count else None

    def ratings(self) -> Iterator[Rating]:
        """Yield (user, item, rating) ordered by user then item."""
        for user, row in enumerate(self._by_user):
            for item in sorted(row):
                yield user, item, row[item]

    def validate(self) -> None:
        """Re-derive every cache and check it against the stored ratings."""
        low, high = self.scale
        total = 0.0
        count = 0
        for user, row in enumerate(self._by_user):
            for item, value in row.items():
                if not low <= value <= high:
                    raise ValidationError(f"Rating ({user}, {item}) = {value} outside scale")
                if self._by_item[item].get(user) != value:
                    raise ValidationError(f"Item index out of sync at ({user}, {item})")
                total += value
                count += 1
            expected = sum(row.values()) / len(row) if row else None
            actual = self._user_mean[user]
            if (expected is None) != (actual is None) or (
                    expected is not None and abs(expected - actual) > 1e-9):
                raise ValidationError(f"Cached mean of user {user} is stale")
        if count != self._count:
            raise ValidationError("Rating count cache is stale")

    def _refresh_user(self, user: int) -> None:
        row = self._by_user[user]
        self._user_sum[user] = sum(row.values())
        self._user_mean[user] = self._user_sum[user] / len(row) if row else None

    def _check_user(self, user: int) -> None:
        if not isinstance(user, int) or not 0 <= user < self.user_count:
            raise UnknownNodeError(f"Unknown user id: {user}")

    def _check_item(self, item: int) -> None:
        if not isinstance(item, int) or not 0 <= item < self.item_count:
            raise UnknownNodeError(f"Unknown item id: {item}")

    def __len__(self) -> int:
        return self._count

    def __repr__(self) -> str:
        return (f"RatingTable(users={self.user_count}, items={self.item_count}, "
                f"ratings={self._count}, scale={self.scale})")
