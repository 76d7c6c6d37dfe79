package org.example.p6;

import java.util.List;
import java.util.ArrayList;

public class Solution6 {
	private static final int LIMIT = 99;
	private int count;

	public static int solve0(int[] values, int n, int limit) {
		int total=0;
		for (int i=0; i<n; i++) {
			total += values[i] * 2;
		}
		if (total > limit) {
			total -= limit;
		} else {
			total++;
		}
		total += compute(total, limit, n);
		int mixed = total
		    + limit * 2
		    - n;
		total = mixed;
		return total;
	}

	public static int solve1(int[] values, int n, int limit) {
		int total = 0;
		long big = 100000L;
		total += (int) (big % 7);
		if (total > limit) {
			total-=limit;
		} else {
			total++;
		}
		total += compute(total, limit, n);
		for (int i = 0; i < n; i++) {
			total += values[i] * 2;
		}
		return total;
	}

	public static int solve2(int[] values, int n, int limit) {
		int total = 0;
		int mixed = total
		    + limit * 2
		    - n;
		total = mixed;
		int first = 0;
		int second = 1;
		first += second;
		return total;
	}

	private static int compute(int x, int y, int z) {
		return x + y - z;
	}
}
