#!/usr/bin/env python3
"""Regenerate the bundled synthetic fixture corpus.

Writes fixtures/tweets_6day_500.jsonl: 500 English, non-retweet records
spanning 2016-07-01 through 2016-07-06 UTC. Early days lean on protest
vocabulary, later days on referendum-aftermath vocabulary, so per-day
top keywords genuinely differ across the timeline. The first record is
pinned at day 1 00:00:00 and the last at day 6 23:59:00 so the corpus
time range is stable. Fully deterministic (seeded); the file is
committed, this script documents how it was produced and lets it be
rebuilt byte-identically.
"""

import json
import random
from pathlib import Path

SEED = 2016
DAY_COUNTS = [70, 85, 80, 90, 95, 80]  # sums to 500
OUT = Path(__file__).resolve().parent.parent / "fixtures" / "tweets_6day_500.jsonl"

PROTEST_TEMPLATES = [
    "a thousand people march through london today in {mood} protest",
    "the protest in london keeps growing, the crowd fills every street",
    "we join the march in london to demand a second vote",
    "{mood} crowd at the rally in london, police watch the march",
    "huge march in the city, people carry signs and shout for a new referendum",
    "students and workers gather for the protest, the march feels {mood}",
    "the rally near parliament draws a massive crowd of protesters",
    "another demonstration in london, a thousand voices demand change",
    "the march ends at the square, the protest stays peaceful",
    "crowd blocks the street during the protest, traffic stops",
]

AFTERMATH_TEMPLATES = [
    "the eu and the uk must negotiate a new deal after the referendum",
    "parliament will debate the vote next week, the future of britain looks {mood}",
    "{mood} hope for a strong economy outside the eu",
    "the market hates uncertainty, the economy braces after the vote",
    "post-brexit trade with europe worries the government",
    "every voter deserves clarity on the post-brexit future of the uk",
    "the government plans new talks with the eu about the border",
    "a leading brexiteer promises a quick trade deal for britain",
    "the pound slides again, the economy feels the {mood} vote",
    "campaign leaders argue about the referendum result and the future",
    "the eu expects the uk to trigger the exit talks soon",
    "voters ask parliament for a clear plan on trade and the border",
]

FILLER_TEMPLATES = [
    "just landed at the airport, long queue again",
    "lovely weather this afternoon, time for tea",
    "watching the football tonight with friends",
    "my train is late again, typical morning",
    "new episode of that show tonight, cannot wait",
]

PROTEST_TAGS = ["#Brexit", "#London", "#Protest", "#March"]
AFTERMATH_TAGS = ["#Brexit", "#EU", "#UK", "#VoteLeave", "#Remain", "#EURef"]

POSITIVE_MOODS = ["hopeful", "great", "calm", "proud", "strong"]
NEGATIVE_MOODS = ["angry", "worried", "sad", "grim", "anxious"]

# (protest, aftermath, filler) weights per day: the story shifts from
# street protests to the aftermath debate as the week goes on.
DAY_THEME_WEIGHTS = [
    (0.70, 0.20, 0.10),
    (0.65, 0.25, 0.10),
    (0.45, 0.45, 0.10),
    (0.25, 0.65, 0.10),
    (0.15, 0.75, 0.10),
    (0.20, 0.70, 0.10),
]


def build_text(rng: random.Random, day_index: int) -> str:
    theme = rng.choices(
        ("protest", "aftermath", "filler"), weights=DAY_THEME_WEIGHTS[day_index]
    )[0]
    if theme == "protest":
        template, tags = rng.choice(PROTEST_TEMPLATES), PROTEST_TAGS
        moods = NEGATIVE_MOODS if rng.random() < 0.7 else POSITIVE_MOODS
    elif theme == "aftermath":
        template, tags = rng.choice(AFTERMATH_TEMPLATES), AFTERMATH_TAGS
        moods = NEGATIVE_MOODS if rng.random() < 0.5 else POSITIVE_MOODS
    else:
        template, tags = rng.choice(FILLER_TEMPLATES), []
        moods = ["quiet"]
    text = template.format(mood=rng.choice(moods))
    if tags:
        chosen = rng.sample(tags, k=min(len(tags), 1 + int(rng.random() * 2.2)))
        text = text + " " + " ".join(chosen)
    return text


def main() -> None:
    rng = random.Random(SEED)
    records = []
    serial = 0
    for day_index, count in enumerate(DAY_COUNTS):
        day = day_index + 1
        for position in range(count):
            serial += 1
            if day_index == 0 and position == 0:
                seconds = 0
            elif day_index == len(DAY_COUNTS) - 1 and position == count - 1:
                seconds = 23 * 3600 + 59 * 60
            else:
                seconds = rng.randrange(1, 86340)
            hh, rem = divmod(seconds, 3600)
            mm, ss = divmod(rem, 60)
            records.append(
                {
                    "id": f"src-{serial:04d}",
                    "text": build_text(rng, day_index),
                    "created_at": f"2016-07-{day:02d}T{hh:02d}:{mm:02d}:{ss:02d}Z",
                    "lang": "en",
                    "is_retweet": False,
                    "source": "synthetic-fixture",
                }
            )
    OUT.parent.mkdir(parents=True, exist_ok=True)
    with OUT.open("w", encoding="utf-8") as fh:
        for record in records:
            fh.write(json.dumps(record, ensure_ascii=False) + "\n")
    print(f"wrote {len(records)} records to {OUT}")


if __name__ == "__main__":
    main()
