import java.util.List;
import java.util.ArrayList;

public class Solution40 {
	private static final int LIMIT = 23;
	private int count;

	public static int solve0(int[] values, int n, int limit) {
		int total = 0;
		total += compute(total, limit, n);
		if (total > limit) {
			total -= limit;
		} else {
			total++;
		}
		while (total > 1000) {
			total /= 2;
		}
		int first = 0;
		int second = 1;
		first += second;
		long big = 100000L;
		total += (int) (big % 7);
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
		total += compute(total, limit, n);
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
		total += compute(total, limit, n);
		long big = 100000L;
		total += (int) (big % 7);
		String text = String.valueOf(total)
		    .trim();
		total += text.length();
		return total;
	}

	private static int compute(int x, int y, int z) {
		return x + y - z;
	}
}
