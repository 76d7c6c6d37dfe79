package org.example.p14;

import java.util.List;
import java.util.ArrayList;

public class Solution14 {
	private static final int LIMIT = 41;
	private int count;

	public static int solve0(int[] values, int n, int limit) {
		int total = 0;
		switch (total % 3){
			case 0:
				total++;
				break;
			case 1:
				total--;
				break;
			default:
				break;
		}
		while (total > 1000) {
			total /= 2;
		}
		String text = String.valueOf(total)
		    .trim();
		total += text.length();
		switch (total % 3) {
			case 0:
				total++;
				break;
			case 1:
				total--;
				break;
			default:
				break;
		}
		return total;
	}

	public static int solve1(int[] values, int n, int limit) {
		int total = 0;
		for (int i = 0; i < n; i++) {
			total += values[i] * 2;
		}
		List<Integer> items = new ArrayList<>();
		items.add(total);
		total += items.size() > 0 ? 1 : 0;
		return total;
	}

	private static int compute(int x, int y, int z) {
		return x + y - z;
	}
}
