"""CSV parsing and eligibility filtering with an auditable exclusion log."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

from .errors import InvalidInputError, RowParseError, SchemaError
from .features import PlayerRecord

CSV_HEADER = (
    "name",
    "league",
    "club",
    "age",
    "height_cm",
    "foot",
    "nationality",
    "outfitter",
    "matches_played",
    "goals",
    "assists",
    "yellow_cards",
    "second_yellow_cards",
    "red_cards",
    "minutes_played",
    "market_value_m_eur",
    "mid_season_transfer",
)

RULE_AGE = "age"
RULE_TRANSFER = "mid_season_transfer"
RULE_VALUE = "market_value"
RULE_MINUTES = "minutes"


@dataclass(frozen=True)
class FilterConfig:
    """Eligibility thresholds; defaults mirror the documented selection rules."""

    min_age: int = 20
    max_age: int = 34
    min_minutes: int = 1000
    min_market_value_m_eur: float = 20.0
    exclude_mid_season_transfers: bool = True

    def __post_init__(self) -> None:
        if self.min_age > self.max_age:
            raise InvalidInputError("min_age must not exceed max_age")
        if self.min_minutes < 0:
            raise InvalidInputError("min_minutes must be >= 0")
        if self.min_market_value_m_eur < 0:
            raise InvalidInputError("min_market_value_m_eur must be >= 0")


@dataclass(frozen=True)
class ExclusionEntry:
    name: str
    rule: str


@dataclass(frozen=True)
class ExclusionLog:
    """Per excluded record: name and the first filter rule it failed."""

    entries: tuple[ExclusionEntry, ...] = field(default_factory=tuple)

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class FilterResult:
    accepted: tuple[PlayerRecord, ...]
    log: ExclusionLog


def _parse_int(cell: str, row: int, column: str) -> int:
    text = cell.strip()
    sign_stripped = text[1:] if text[:1] in "+-" else text
    if not sign_stripped.isdigit():
        raise RowParseError(row, column, f"expected an integer, got {cell!r}")
    return int(text)


def _parse_float(cell: str, row: int, column: str) -> float:
    text = cell.strip()
    try:
        value = float(text)
    except ValueError:
        raise RowParseError(row, column, f"expected a number, got {cell!r}") from None
    return value


def _parse_flag(cell: str, row: int, column: str) -> bool:
    text = cell.strip()
    if text == "0":
        return False
    if text == "1":
        return True
    raise RowParseError(row, column, f"expected 0 or 1, got {cell!r}")


def parse_players_csv(data: bytes) -> list[PlayerRecord]:
    """Parse a UTF-8 player CSV into records.

    The header must match `CSV_HEADER` exactly.  Numeric cells are parsed
    strictly; category cells are whitespace-trimmed with case preserved.
    Row numbers in errors are 1-based file lines (header = row 1).
    An empty file yields an empty list.
    """
    text = data.decode("utf-8")
    if text.strip() == "":
        return []
    reader = csv.reader(io.StringIO(text))
    header = [h.strip() for h in next(reader)]
    if header != list(CSV_HEADER):
        missing = [c for c in CSV_HEADER if c not in header]
        extra = [c for c in header if c not in CSV_HEADER]
        if missing:
            raise SchemaError(f"missing column(s): {', '.join(missing)}")
        if extra:
            raise SchemaError(f"unexpected column(s): {', '.join(extra)}")
        raise SchemaError("header columns are out of order")

    records: list[PlayerRecord] = []
    for line, row in enumerate(reader, start=2):
        if not row:
            continue  # tolerate blank lines
        if len(row) != len(CSV_HEADER):
            raise RowParseError(line, "row", f"expected {len(CSV_HEADER)} cells, got {len(row)}")
        cell = dict(zip(CSV_HEADER, row))
        try:
            record = PlayerRecord(
                name=cell["name"].strip(),
                league=cell["league"].strip(),
                club=cell["club"].strip(),
                age=_parse_int(cell["age"], line, "age"),
                height_cm=_parse_int(cell["height_cm"], line, "height_cm"),
                foot=cell["foot"].strip(),
                nationality=cell["nationality"].strip(),
                outfitter=cell["outfitter"].strip(),
                matches_played=_parse_int(cell["matches_played"], line, "matches_played"),
                goals=_parse_int(cell["goals"], line, "goals"),
                assists=_parse_int(cell["assists"], line, "assists"),
                yellow_cards=_parse_int(cell["yellow_cards"], line, "yellow_cards"),
                second_yellow_cards=_parse_int(cell["second_yellow_cards"], line, "second_yellow_cards"),
                red_cards=_parse_int(cell["red_cards"], line, "red_cards"),
                minutes_played=_parse_int(cell["minutes_played"], line, "minutes_played"),
                market_value_m_eur=_parse_float(cell["market_value_m_eur"], line, "market_value_m_eur"),
                mid_season_transfer=_parse_flag(cell["mid_season_transfer"], line, "mid_season_transfer"),
            )
        except InvalidInputError as exc:
            raise RowParseError(line, "record", str(exc)) from exc
        records.append(record)
    return records


def _first_failing_rule(record: PlayerRecord, cfg: FilterConfig) -> str | None:
    # Rule order is fixed: age, transfer, value, minutes.
    if not cfg.min_age <= record.age <= cfg.max_age:
        return RULE_AGE
    if cfg.exclude_mid_season_transfers and record.mid_season_transfer:
        return RULE_TRANSFER
    if record.market_value_m_eur < cfg.min_market_value_m_eur:
        return RULE_VALUE
    if record.minutes_played < cfg.min_minutes:
        return RULE_MINUTES
    return None


def apply_filters(records: list[PlayerRecord], cfg: FilterConfig = FilterConfig()) -> FilterResult:
    """Partition records into the accepted set and an exclusion log.

    Thresholds are inclusive: a record exactly at `min_minutes` or
    `min_market_value_m_eur` is accepted.  Each excluded record is logged
    with the first rule it failed.
    """
    accepted: list[PlayerRecord] = []
    entries: list[ExclusionEntry] = []
    for record in records:
        rule = _first_failing_rule(record, cfg)
        if rule is None:
            accepted.append(record)
        else:
            entries.append(ExclusionEntry(record.name, rule))
    return FilterResult(accepted=tuple(accepted), log=ExclusionLog(tuple(entries)))
