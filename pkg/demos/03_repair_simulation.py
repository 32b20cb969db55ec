"""Plan and execute sequential repairs, then run a seeded campaign.

A repair schedule is an ordered list of (symbol, helpers, coefficients)
steps; each step may read symbols restored by earlier steps, which is
exactly what makes the recovery sequential rather than parallel.
"""
from slrc import execute_repair, plan_repair, trial_campaign
from slrc.reference import reference_code

code = reference_code()

message = [1, 2, 3, 0, 1, 2]
word = code.encode(message)
print(f"codeword: {list(word)}")

erased = (0, 6, 7)   # an information symbol plus both parities of its line
schedule = plan_repair(code, erased, r=3)
print(f"\nerase coordinates {[i + 1 for i in erased]}:")
for step in schedule.steps:
    print(f"  repair c{step.repaired + 1} from "
          f"{[h + 1 for h in step.helpers]} with coeffs {list(step.coeffs)}")
restored = execute_repair(code, word, erased, schedule)
print(f"restored exactly: {restored == tuple(word)}")

stuck = (5, 10, 11, 12, 13)  # beyond the tolerance: both lines of c6 gone
schedule = plan_repair(code, stuck, r=3)
print(f"\nerase {[i + 1 for i in stuck]}: complete = {schedule.complete}, "
      f"stuck on {[i + 1 for i in schedule.residual]}")

print("\nseeded campaign at the certified tolerance t = 4:")
stats = trial_campaign(code, r=3, t=4, trials=500, seed=42)
print(f"  success rate {stats['success_rate']}, "
      f"mean schedule length {stats['mean_schedule_length']:.2f}, "
      f"mean helpers per repair {stats['mean_helpers_per_repair']:.2f}")

print("campaign with patterns up to n = 16 (failures expected):")
stats = trial_campaign(code, r=3, t=16, trials=500, seed=42)
print(f"  success rate {stats['success_rate']:.3f}, "
      f"failures {stats['failure_count']}")
