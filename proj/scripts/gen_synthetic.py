#!/usr/bin/env python3
"""Generate the bundled synthetic player-statistics dataset.

Deterministic (fixed seed). Writes players.csv, batting.csv and bowling.csv
into the output directory (default: data/synthetic).
"""
import argparse
import pathlib
import random

SEASONS = list(range(2008, 2019))
CURRENT = SEASONS[-1]


def batting_season(rng, style):
    innings = rng.randint(3, 16)
    not_outs = rng.randint(0, innings // 2 if style == "finisher" else innings // 4)
    per_inn = {"opener": (18, 32), "middle": (14, 26), "finisher": (7, 16)}[style]
    balls = sum(rng.randint(*per_inn) for _ in range(innings))
    four_rate = {"opener": 0.14, "middle": 0.10, "finisher": 0.11}[style]
    six_rate = {"opener": 0.05, "middle": 0.04, "finisher": 0.09}[style]
    fours = int(balls * four_rate * rng.uniform(0.6, 1.3))
    sixes = int(balls * six_rate * rng.uniform(0.5, 1.4))
    dots_and_singles = balls - fours - sixes
    non_boundary = int(dots_and_singles * rng.uniform(0.45, 0.85))
    runs = 4 * fours + 6 * sixes + non_boundary
    hundreds = min(runs // 100 // 4, 1 if rng.random() < 0.25 else 0)
    fifties = min(max(0, (runs - 100 * hundreds) // 50 // 3 + rng.randint(-1, 1)),
                  innings - hundreds)
    return dict(innings=innings, not_outs=not_outs, runs=runs, balls=balls,
                hundreds=hundreds, fifties=fifties, fours=fours, sixes=sixes)


def bowling_season(rng):
    innings = rng.randint(3, 16)
    balls = sum(rng.choice([12, 18, 24, 24, 24]) for _ in range(innings))
    wickets = min(balls, int(innings * rng.uniform(0.4, 1.9)))
    five_hauls = 1 if wickets >= 9 and rng.random() < 0.2 else 0
    four_hauls = 1 if wickets - 5 * five_hauls >= 6 and rng.random() < 0.35 else 0
    runs_conceded = int(balls * rng.uniform(1.05, 1.6))
    return dict(innings=innings, balls=balls, runs_conceded=runs_conceded, wickets=wickets,
                four_hauls=four_hauls, five_hauls=five_hauls)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="data/synthetic")
    ap.add_argument("--seed", type=int, default=2018)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    players = []  # (id, name, keeper, retired)
    batting = []
    bowling = []

    styles = ["opener"] * 10 + ["middle"] * 11 + ["finisher"] * 10
    keepers = {"B03", "B12", "B23", "B24", "B27"}
    for n, style in enumerate(styles, start=1):
        pid = f"B{n:02d}"
        retired = n == 31
        players.append((pid, f"Batsman {n:02d}", pid in keepers, retired))
        debut = rng.choice(SEASONS[:8])
        for season in SEASONS:
            if season < debut or rng.random() < 0.12:
                continue
            if retired and season == CURRENT:
                continue
            # B07 sits out the current season; B19 has a season of only not-outs
            if pid == "B07" and season == CURRENT:
                continue
            row = batting_season(rng, style)
            if pid == "B19" and season == CURRENT:
                row.update(innings=2, not_outs=2, hundreds=0, fifties=0)
            batting.append((pid, season, row))
        # a few batsmen also bowl
        if pid in {"B05", "B18", "B29"}:
            for season in SEASONS[-4:]:
                bowling.append((pid, season, bowling_season(rng)))

    for n in range(1, 19):
        pid = f"W{n:02d}"
        retired = n == 18
        players.append((pid, f"Bowler {n:02d}", False, retired))
        debut = rng.choice(SEASONS[:9])
        for season in SEASONS:
            if season < debut or rng.random() < 0.1:
                continue
            if retired and season == CURRENT:
                continue
            bowling.append((pid, season, bowling_season(rng)))
        # tail-enders bat a little
        if n % 6 == 0:
            batting.append((pid, CURRENT, dict(innings=3, not_outs=1, runs=21, balls=25,
                                               hundreds=0, fifties=0, fours=2, sixes=0)))
    # make sure the current season is present for the non-retired pool
    if not any(p == "W17" and s == CURRENT for p, s, _ in bowling):
        bowling.append(("W17", CURRENT, bowling_season(rng)))
    # a season with zero runs conceded
    bowling.append(("W09", 2009, dict(innings=1, balls=6, runs_conceded=0, wickets=1,
                                      four_hauls=0, five_hauls=0)))
    bowling = [r for i, r in enumerate(bowling)
               if not any(r[0] == q[0] and r[1] == q[1] for q in bowling[i + 1:])]

    with open(out / "players.csv", "w") as f:
        f.write("id,name,is_wicketkeeper,is_retired\n")
        for pid, name, keeper, retired in players:
            f.write(f"{pid},{name},{str(keeper).lower()},{str(retired).lower()}\n")
    with open(out / "batting.csv", "w") as f:
        f.write("id,season,innings,not_outs,runs,balls,hundreds,fifties,fours,sixes\n")
        for pid, season, r in sorted(batting, key=lambda x: (x[0], x[1])):
            f.write(f"{pid},{season},{r['innings']},{r['not_outs']},{r['runs']},{r['balls']},"
                    f"{r['hundreds']},{r['fifties']},{r['fours']},{r['sixes']}\n")
    with open(out / "bowling.csv", "w") as f:
        f.write("id,season,innings,balls,runs_conceded,wickets,four_hauls,five_hauls\n")
        for pid, season, r in sorted(bowling, key=lambda x: (x[0], x[1])):
            f.write(f"{pid},{season},{r['innings']},{r['balls']},{r['runs_conceded']},"
                    f"{r['wickets']},{r['four_hauls']},{r['five_hauls']}\n")


if __name__ == "__main__":
    main()
